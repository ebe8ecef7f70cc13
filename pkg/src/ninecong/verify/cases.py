"""Worked examples together with the curves they should produce."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import gens
from ..elliptic import WeierstrassCurve


class UnknownEquations(KeyError):
    """The case is known only by label; no equations are available to check."""


@dataclass(frozen=True)
class ExampleCase:
    ident: str
    kind: str  # "rational", "function-field" or "triple"
    sign: str | None = None
    a: object = None
    b: object = None
    matrix: tuple | None = None
    transformed: tuple | None = None  # the simplified pair (F1, F2) as strings
    points: tuple = ()
    expected: tuple = ()  # ((label, WeierstrassCurve), ...) in point order
    rs: tuple | None = None  # expected (r : s) over Q(T)
    specialize_at: object = None
    search_height: int = 5
    notes: dict = field(default_factory=dict)


def _W(*ainvs):
    return WeierstrassCurve(*ainvs)


E_47775 = _W(0, -1, 1, -32013, 2215478)

MATRIX_47775 = (
    (2520473760, 937149484320, -1998984627360, -152410870080),
    (0, 79644600, -185343480, -3827880),
    (0, -22932, 47040, 6468),
    (0, -6, 13, 1),
)

TRANSFORMED_47775 = (
    "-x^2*z + x^2*t + 4*x*y*z + 2*x*y*t - 3*x*z^2 + 2*x*z*t - 3*x*t^2 + 6*y^3 + 14*y^2*z"
    " + y^2*t + 6*y*z^2 - 4*y*z*t + 9*y*t^2 - 6*z^3 + 27*z^2*t - 13*z*t^2 - t^3",
    "-3*x^2*y + 4*x^2*z + 3*x^2*t + 3*x*y^2 + 20*x*y*z - 12*x*y*t - 3*x*z^2 - 32*x*z*t"
    " + 25*x*t^2 + 21*y^3 + 16*y^2*z - 24*y^2*t - 12*y*z^2 + 100*y*z*t + 34*y*t^2"
    " + 39*z^3 - 21*z^2*t - 56*z*t^2 - 11*t^3",
)

MATRIX_201 = (
    (-26471709, -23136696, 20106774, -20376135),
    (-45147, -39828, 33990, -34509),
    (90294, 79332, -68304, 69342),
    (77, 68, -58, 59),
)

TRANSFORMED_201 = (
    "-x^3 + 4*x^2*y + 3*x^2*z - x^2*t + 6*x*y^2 + 2*x*y*z - 2*x*y*t - 6*x*z^2 + 4*x*z*t"
    " - 11*x*t^2 + y^3 + 7*y^2*t - 2*y*z^2 + 4*y*z*t - 4*y*t^2 + 6*z^3 - 7*z^2*t + 4*z*t^2 + t^3",
    "2*x^3 - x^2*y + 5*x^2*t - 10*x*y^2 - 2*x*y*z + 16*x*y*t - 3*x*z^2 + 4*x*z*t + 8*x*t^2"
    " - 5*y^3 - y^2*z - 3*y^2*t - y*z^2 - 2*y*z*t + 12*y*t^2 + 3*z^3 - 4*z^2*t + 2*z*t^2 - 3*t^3",
)


def _qt_direct():
    (T,) = gens("T")
    a = Fraction(1, 2) * (39 * T**4 - 60 * T**3 - 162 * T**2 + 60 * T + 39)
    b = 47 * T**6 + 120 * T**5 + 21 * T**4 + 21 * T**2 - 120 * T + 47
    P = (Fraction(15, 2) * (3 * T**4 + 8 * T**3 - 2 * T**2 - 8 * T + 3), T**2 + 1, T**0, 0 * T)
    r = 47 * T**6 - 78 * T**5 - 153 * T**4 + 244 * T**3 + 153 * T**2 - 78 * T - 47
    s = 18 * (T**2 + 1) * (T**2 + 6 * T - 1)
    return a, b, P, (r, s)


def _qt_reverse():
    (T,) = gens("T")
    u1 = 6 * T**3 - 3 * T - 1
    u2 = 9 * T**3 - 9 * T - 4
    a = 3 * (3 * T + 1) * u1 * u2**2
    b = 2 * (3 * T**3 + 27 * T**2 + 21 * T + 4) * u1**2 * u2**2
    P = (-u1 * u2, T, T**0, 0 * T)
    r = (3 * T + 1) * u2 * u1 * (180 * T**4 + 321 * T**3 + 216 * T**2 + 66 * T + 8)
    s = 3 * (369 * T**6 + 1107 * T**5 + 1431 * T**4 + 1017 * T**3 + 414 * T**2 + 90 * T + 8)
    return a, b, P, (r, s)


def _cases():
    qa, qb, qP, qrs = _qt_direct()
    ra, rb, rP, rrs = _qt_reverse()
    return {
        "ex-47775-direct": ExampleCase(
            "ex-47775-direct", "rational", "direct", -41489280, 102867483600,
            MATRIX_47775, TRANSFORMED_47775,
            ((1, 0, 0, 0), (4, -1, -1, 0), (1, 2, -1, 0)),
            (
                ("47775z1", E_47775),
                ("429975*", _W(0, 0, 1, -314688780, -2148671872069)),
                ("494901225*", _W(0, 0, 1, -23634650164230, -21037908383222056594)),
            ),
            notes={"input": E_47775},
        ),
        "ex-201-reverse": ExampleCase(
            "ex-201-reverse", "rational", "reverse", -1029699, 402173694,
            MATRIX_201, TRANSFORMED_201,
            ((1, -2, -1, 0),),
            (("374865*", _W(1, 1, 0, -60068738107, 4858035498982726)),),
            search_height=3,
        ),
        "ex-qt-direct": ExampleCase(
            "ex-qt-direct", "function-field", "direct", qa, qb,
            points=(qP,), rs=qrs, specialize_at=0,
        ),
        "ex-qt-reverse": ExampleCase(
            "ex-qt-reverse", "function-field", "reverse", ra, rb,
            points=(rP,), rs=rrs, specialize_at=Fraction(-1, 4),
        ),
        "triple-4650": ExampleCase(
            "triple-4650", "triple", "direct",
            expected=(
                ("4650j1", _W(1, 1, 0, -2700, 54000)),
                ("553350*", _W(1, 1, 0, -10472207700, -455228489646000)),
                ("1966950*", _W(1, -1, 0, -20654522386242, -36130051534030639084)),
            ),
        ),
        "triple-27606": ExampleCase(
            "triple-27606", "triple", "direct",
            expected=(
                ("27606c1", _W(1, 0, 0, -10289707, 12703497719)),
                ("358878*", _W(1, 0, 0, 2940333, -1416695391)),
                ("1242270*", _W(1, -1, 1, -359912, -322105301)),
            ),
        ),
    }


CASES = _cases()

# Known 9-congruent by label only; nothing to compute with.
LABEL_ONLY = {"triple-1701": ("1701a1", "1701g1", "22113c1")}


def get_case(ident: str) -> ExampleCase:
    if ident in CASES:
        return CASES[ident]
    if ident in LABEL_ONLY:
        raise UnknownEquations(f"{ident}: only labels {LABEL_ONLY[ident]} are known, no equations")
    raise KeyError(f"unknown case {ident!r}; known: {sorted(CASES)}")
