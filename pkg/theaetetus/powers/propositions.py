"""
Executable theorems about the sides of squares equal to integers.

Each decision comes with a `ProofTrace`: a linear list of steps, each tagged with the
proposition of the Elements (or the named result) it relies on and carrying the exact
values it speaks about.
"""
import collections
import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from . import config, integers, ratio, surd
from .errors import FalseClaimError, InvariantViolation, PreconditionError
from .integers import Natural
from .ratio import Ratio
from .surd import Surd

logger = logging.getLogger(__name__)

Witness = Union[Natural, Ratio, Surd]


class Tag(str, enum.Enum):
    """
    The results a proof step may invoke.

    Attributes:
        VII_13 (str): A proportion may be alternated.
        VII_20 (str): The least numbers of a ratio measure any others in that ratio equally.
        VII_22 (str): Numbers prime to one another are the least of those in their ratio.
        VII_24 (str): The squares of numbers prime to one another are prime to one another.
        X_9 (str): Sides are commensurable in length iff their squares are as square to square.
        PROP_A (str): The side of a square equal to an integer is rational iff the integer is a square.
        PROP_A_PRIME (str): The side of a square equal to an integer is an integer iff the integer is a square.
        INTEGRALITY (str): A ratio in least terms whose square is an integer has a unit consequent.
        DICHOTOMY (str): Every integer is either square or oblong.
    """
    VII_13 = "VII.13"
    VII_20 = "VII.20"
    VII_22 = "VII.22"
    VII_24 = "VII.24"
    X_9 = "X.9"
    PROP_A = "PROP-A"
    PROP_A_PRIME = "PROP-A'"
    INTEGRALITY = "INTEGRALITY"
    DICHOTOMY = "DICHOTOMY"


def _witness_kind(value) -> str:
    if isinstance(value, Surd):
        return "surd"
    if isinstance(value, Ratio):
        return "ratio"
    if isinstance(value, int) and not isinstance(value, bool) and value >= 1:
        return "natural"
    raise InvariantViolation(f"Witness {value!r} is not an exact natural, ratio or surd.")


@dataclass(frozen=True)
class Step:
    tag: Tag
    statement: str
    witnesses: Tuple[Witness, ...] = ()

    def to_line(self) -> str:
        return f"{self.tag.value} | {self.statement} | {', '.join(str(w) for w in self.witnesses)}"

    def to_dict(self) -> Dict:
        return {
            "tag": self.tag.value,
            "statement": self.statement,
            "witnesses": [{"kind": _witness_kind(w), "value": str(w)} for w in self.witnesses],
        }


@dataclass
class ProofTrace:
    """An ordered derivation.

    Attributes:
        steps (list): The `Step` objects, in the order they were derived.
    """
    steps: List[Step] = field(default_factory=list)

    def add(self, tag: Tag, statement: str, *witnesses: Witness) -> "ProofTrace":
        step = Step(Tag(tag), statement, tuple(witnesses))
        logger.debug("%s", step.to_line())
        self.steps.append(step)
        return self

    def extend(self, other: "ProofTrace") -> "ProofTrace":
        self.steps.extend(other.steps)
        return self

    def tags(self) -> List[Tag]:
        return [step.tag for step in self.steps]

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def validate(self) -> "ProofTrace":
        """Check the trace is non-empty, every tag is known and every witness exact.

        Returns:
            ProofTrace: The trace itself.

        Raises:
            InvariantViolation: On the first violation found.
        """
        if not self.steps:
            raise InvariantViolation("A proof trace cannot be empty.")
        for step in self.steps:
            if not isinstance(step.tag, Tag):
                raise InvariantViolation(f"Unknown proof tag {step.tag!r}.")
            for witness in step.witnesses:
                _witness_kind(witness)
        return self

    def to_lines(self) -> List[str]:
        """One `TAG | statement | witnesses` line per step."""
        return [step.to_line() for step in self.steps]

    def to_document(self) -> List[Dict]:
        """One dict per step, suitable for `json.dumps`."""
        return [step.to_dict() for step in self.steps]


@dataclass(frozen=True)
class Rational:
    """Verdict: the magnitude is rational, with this value."""
    value: Ratio

    def __str__(self):
        return f"rational {self.value.compact()}"


@dataclass(frozen=True)
class Irrational:
    """Verdict: the magnitude is not rational."""

    def __str__(self):
        return "irrational"


@dataclass(frozen=True)
class Power:
    """Lesson verdict: a power, incommensurable in length with the unit but rational in square."""
    surd: Surd

    def __str__(self):
        return f"power {self.surd.pretty()}"


Verdict = Union[Rational, Irrational]
Decision = collections.namedtuple('Decision', 'verdict trace')
Partition = collections.namedtuple('Partition', 'P R')


@dataclass(frozen=True)
class LessonEntry:
    n: Natural
    verdict: Union[Rational, Power]


@dataclass(frozen=True)
class LessonReport:
    """The lesson on powers: one entry per integer of the lesson range.

    Attributes:
        entries (tuple): `LessonEntry` objects in lesson order.
    """
    entries: Tuple[LessonEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def rational_entries(self) -> List[LessonEntry]:
        return [entry for entry in self.entries if isinstance(entry.verdict, Rational)]


@dataclass(frozen=True)
class GapReport:
    """What X.9 and Proposition A each conclude about an integer, and what bridges them.

    Attributes:
        text (str): Human readable report.
        prop_b_conclusion (Ratio): The rational whose square is `n`, or None.
        prop_a_conclusion (bool): Whether `n` is a perfect square.
        bridge (Tag): The step without which X.9 does not give Proposition A.
    """
    text: str
    prop_b_conclusion: Optional[Ratio]
    prop_a_conclusion: bool
    bridge: Tag = Tag.INTEGRALITY

    @property
    def values(self):
        return self.prop_b_conclusion, self.prop_a_conclusion


def prop_a_decide(n: Natural) -> Decision:
    """Decide whether the side of the square equal to `n` is rational.

    Args:
        n (int): A natural number.

    Returns:
        Decision: `Rational(p/1)` when `n == p**2`, `Irrational()` otherwise, with the trace.
    """
    root, exact = integers.isqrt(n)
    trace = ProofTrace()
    # isqrt alone settles the dichotomy.
    kind, relation = ("square", "=") if exact else ("oblong", "≠")
    trace.add(Tag.DICHOTOMY, f"{n} is {kind}: isqrt({n}) = {root} and {root}² {relation} {n}", n, root)
    if exact:
        value = Ratio(root, 1)
        trace.add(Tag.PROP_A_PRIME, f"√{n} is the integer {root}", value)
        trace.add(Tag.PROP_A, f"√{n} = {root} is rational since {n} is a perfect square", value)
        return Decision(Rational(value), trace.validate())

    trace.add(Tag.INTEGRALITY,
              f"a rational √{n} = m/k in least terms would make m²/k² = {n} an integer, "
              f"forcing k = 1 and {n} = m², but {n} lies strictly between {root}² and {root + 1}²",
              n)
    trace.add(Tag.PROP_A, f"√{n} is irrational since {n} is not a perfect square", n, root)
    return Decision(Irrational(), trace.validate())


def integrality_lemma(m: Natural, n: Natural) -> Tuple[bool, ProofTrace]:
    """If `m/n` is in least terms and `m²/n²` is an integer, then `n == 1`.

    Args:
        m (int): Numerator.
        n (int): Denominator, prime to `m`.

    Returns:
        tuple: `(verdict, trace)`, verdict being whether `m²/n²` is an integer.

    Raises:
        PreconditionError: If `m` and `n` are not prime to one another.
    """
    common = integers.gcd(m, n)
    if common != 1:
        raise PreconditionError(f"{m} and {n} are not prime to one another, gcd = {common}.")
    least = Ratio(m, n)
    trace = ProofTrace()
    trace.add(Tag.VII_22, f"{m} and {n} are prime to one another, so {least} is in least terms", least)
    squares = ratio.square_ratio(least)
    trace.add(Tag.VII_24, f"gcd({squares.num}, {squares.den}) = 1, the squares are prime to one another",
              squares.num, squares.den)

    nn = n * n
    if nn == 1:
        r = squares.num
        ratio.alternate(squares.num, squares.den, r, 1)
        trace.add(Tag.VII_13, f"{squares.num}:1 :: {r}:1 alternates to {squares.num}:{r} :: 1:1", squares.num, r)
        q = ratio.vii20_divides(r, 1)
        trace.add(Tag.VII_20, f"{squares} measures {r}:1 exactly {q} time, so {squares.num}/1 is an integer, n²=1",
                  squares, q)
        return True, trace.validate()

    trace.add(Tag.VII_20,
              f"were {squares.num}/{nn} an integer r, {squares} would measure r:1 and {nn} would measure 1, "
              f"which it does not, so {squares.num}/{nn} is not an integer",
              squares, nn)
    return False, trace.validate()


def prop_a_certify(r: Natural, claim_num: Natural, claim_den: Natural) -> ProofTrace:
    """Certify a true claim `(claim_num / claim_den)**2 == r` through the Book VII chain.

    Args:
        r (int): The integer.
        claim_num (int): Numerator of the claimed square root.
        claim_den (int): Denominator of the claimed square root.

    Returns:
        ProofTrace: A derivation that the claim reduces to `m/1` and `r == m**2`.

    Raises:
        FalseClaimError: If `claim_num**2 != r * claim_den**2`.
    """
    for name, value in (("r", r), ("claim_num", claim_num), ("claim_den", claim_den)):
        integers.check_natural(value, name)
    lhs, rhs = claim_num * claim_num, r * claim_den * claim_den
    if lhs != rhs:
        raise FalseClaimError(f"claim false: {lhs} ≠ {rhs}")

    trace = ProofTrace()
    least = ratio.reduce(claim_num, claim_den)
    g = integers.gcd(claim_num, claim_den)
    trace.add(Tag.VII_22, f"{claim_num}/{claim_den} divided by {g} gives the least terms {least}",
              claim_num, claim_den, least)
    squares = ratio.square_ratio(least)
    trace.add(Tag.VII_24, f"{least.num}² and {least.den}² are prime to one another, so {squares} is in least terms",
              squares)
    if ratio.reduce(r, 1) != squares:
        raise InvariantViolation(f"{squares} and {r}:1 are the same ratio but have different least terms.")
    q = ratio.vii20_divides(r, 1)
    trace.add(Tag.VII_20, f"{squares} :: {r}:1 and the least terms measure {r}:1 exactly {q} time, "
                          f"so {squares.den} = 1 and {r} = {squares.num}",
              squares, Ratio(r, 1))
    trace.add(Tag.PROP_A, f"{r} = {least.num}² is a perfect square", r, least.num)
    return trace.validate()


def prop_b_decide(r: Ratio) -> Decision:
    """Decide whether the side of the square equal to the ratio `r` is rational (X.9).

    Args:
        r (Ratio): The ratio of the square to the unit square.

    Returns:
        Decision: `Rational(root)` when `r` is as a square number to a square number,
            `Irrational()` otherwise. For integers the trace also records the integrality
            step, which X.9 alone does not provide.
    """
    trace = ProofTrace()
    trace.add(Tag.VII_22, f"{r} is in least terms", r)
    square_to_square = ratio.is_square_to_square(r.num, r.den)
    trace.add(Tag.X_9,
              f"{r.num}:{r.den} is{'' if square_to_square else ' not'} the ratio of a square number "
              f"to a square number, so the side is{'' if square_to_square else ' not'} commensurable with the unit",
              r.num, r.den)
    if r.den == 1:
        trace.add(Tag.INTEGRALITY,
                  f"X.9 gives a rational square only; for the integer {r.num} a side m/k in least terms with "
                  f"m²/k² = {r.num} has k = 1, so this agrees with Proposition A",
                  r.num)
    if square_to_square:
        root = Ratio(integers.isqrt(r.num).root, integers.isqrt(r.den).root)
        return Decision(Rational(root), trace.validate())
    return Decision(Irrational(), trace.validate())


def prop_a_prime(n: Natural) -> bool:
    """Whether the side of the square equal to `n` is an integer."""
    root = integers.isqrt(n).root
    return root * root == n


def oracle_mismatches(limit: Natural) -> List[Natural]:
    """Integers in 1..limit on which three independent deciders of Proposition A disagree.

    The deciders are the surd kernel being 1, the integer square root being exact, and
    every exponent of the prime factorization being even.

    Args:
        limit (int): The largest integer checked.

    Returns:
        list: The integers with a disagreement; empty when all agree.
    """
    integers.check_natural(limit, "limit")
    mismatches = []
    for n in range(1, limit + 1):
        by_kernel = surd.is_rational(surd.sqrt_of_integer(n)) is not None
        by_isqrt = integers.isqrt(n).exact
        by_parity = all(exponent % 2 == 0 for exponent in integers.factorize(n).values())
        if not by_kernel == by_isqrt == by_parity:
            logger.warning("Deciders disagree on %d: kernel=%s isqrt=%s parity=%s", n, by_kernel, by_isqrt, by_parity)
            mismatches.append(n)
    return mismatches


def gap_witness(n: Natural) -> GapReport:
    """Set side by side what X.9 and Proposition A conclude about `n`.

    Args:
        n (int): A natural number.

    Returns:
        GapReport: Both conclusions, and the integrality step bridging them.

    Raises:
        InvariantViolation: If the two conclusions do not coincide.
    """
    b_verdict = prop_b_decide(Ratio(n, 1)).verdict
    a_verdict = prop_a_decide(n).verdict
    b_conclusion = b_verdict.value if isinstance(b_verdict, Rational) else None
    a_conclusion = isinstance(a_verdict, Rational)
    if (b_conclusion is not None) != a_conclusion:
        raise InvariantViolation(f"X.9 and Proposition A disagree on {n}.")

    if b_conclusion is not None:
        b_line = f"B (X.9): {n}/1 is the square of the rational {b_conclusion}"
    else:
        b_line = f"B (X.9): {n}/1 is not the square of a rational"
    lines = [
        b_line,
        f"A: {n} is a perfect square: {'true' if a_conclusion else 'false'}",
        f"bridge: {Tag.INTEGRALITY.value} (X.9 yields the square of a rational; "
        f"only the integrality lemma makes it the square of an integer)",
    ]
    return GapReport("\n".join(lines), b_conclusion, a_conclusion)


def theodorus_lesson() -> LessonReport:
    """The lesson on powers over the odd integers from 3 up to, but excluding, 17.

    Returns:
        LessonReport: One entry per integer; 9 is the only rational one.
    """
    entries = []
    for n in range(config.THEODORUS_START, config.THEODORUS_STOP, config.THEODORUS_STEP):
        side = surd.sqrt_of_integer(n)
        value = surd.is_rational(side)
        entries.append(LessonEntry(n, Rational(value) if value is not None else Power(side)))
    return LessonReport(tuple(entries))


def partition_integers(limit: Natural) -> Partition:
    """Divide 1..limit into squares `P` and the rest `R`.

    Args:
        limit (int): The largest integer considered.

    Returns:
        Partition: `(P, R)`, both ascending.
    """
    integers.check_natural(limit, "limit")
    squares, oblongs = [], []
    for n in range(1, limit + 1):
        rational = surd.is_rational(surd.sqrt_of_integer(n)) is not None
        if integers.is_perfect_square(n) != rational:
            raise InvariantViolation(f"The side of {n} does not fall on the side of its class.")
        (squares if rational else oblongs).append(n)
    return Partition(squares, oblongs)
