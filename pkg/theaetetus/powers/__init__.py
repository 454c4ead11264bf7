from .errors import (ExpressionError, FalseClaimError, InvariantViolation, MalformedFigureError,  # noqa: F401, F403
                     NotNaturalError, PreconditionError)
from .integers import (Oblong, Square, classify, divisors, factorize, gcd, is_perfect_square,  # noqa: F401, F403
                       is_squarefree, isqrt, rectangle_representations, squarefree_decompose)
from .ratio import (Ratio, alternate, is_square_to_square, reduce, same_ratio, same_ratio_by_parts,  # noqa: F401, F403
                    square_ratio, vii20_divides)
from .surd import (Commensurable, Incommensurable, Surd, commensurability_classes, commensurable,  # noqa: F401, F403
                   is_rational, sqrt_of_integer, sqrt_of_ratio)
from .parsers import parse_ratio, parse_sqrt_expression, parse_surd  # noqa: F401, F403
from .propositions import (Irrational, Power, ProofTrace, Rational, Tag, gap_witness,  # noqa: F401, F403
                           integrality_lemma, partition_integers, prop_a_certify, prop_a_decide, prop_a_prime,
                           prop_b_decide, theodorus_lesson)
from .construction import figure_to_svg, geometric_mean_figure, square_the_rectangle, verify_figure  # noqa: F401, F403

from ._version import __version__  # noqa: F401, F403, E402
