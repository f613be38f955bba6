"""Partition counts over arbitrary part sets, and exact checks of identities
between unrestricted, multiplicity-capped and signed partition counts that
hold for every choice of part set."""
from .counting import CountTable, count
from .identities import VerificationReport, verify
from .partset import PartSet, enumerate_parts, parse_partset
from .series import SeriesZ, build_gf, product_over_scales
from .solutions import SolutionMatrix, count_solutions, enumerate_solutions, gamma_support
from .statistic import SIGNED, UNRESTRICTED, Statistic, bounded, even_parts, odd_parts, signed_bounded

__version__ = "0.1.0"
