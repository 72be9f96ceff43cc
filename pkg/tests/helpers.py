import random
from fractions import Fraction

from cyclotrig.exact import CycloElem, totient

# Known identities, as text; a regression corpus for parsing and verification.
KNOWN_IDENTITIES = [
    "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)",
    "tan(pi/11) + 4 sin(3pi/11) = sqrt(11)",
    "tan(4pi/11) + 4 sin(pi/11) = sqrt(11)",
    "tan(2pi/11) - 4 sin(5pi/11) = -sqrt(11)",
    "tan(5pi/11) - 4 sin(4pi/11) = sqrt(11)",
    "tan(pi/9) + 4 sin(pi/9) = sqrt(3)",
    "tan(2pi/9) - 4 sin(2pi/9) = -sqrt(3)",
    "tan(4pi/9) - 4 sin(4pi/9) = sqrt(3)",
    "tan(6pi/9) + 4 sin(6pi/9) = sqrt(3)",
    "tan(pi/7) - 4 sin(2pi/7) = -sqrt(7)",
    "tan(2pi/7) - 4 sin(3pi/7) = -sqrt(7)",
    "tan(3pi/7) - 4 sin(pi/7) = sqrt(7)",
    "tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)",
    "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)",
    "tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)",
]


def random_rational(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def random_elem(rng: random.Random, n: int, density: float = 0.6) -> CycloElem:
    return CycloElem(
        n,
        [random_rational(rng) if rng.random() < density else 0 for _ in range(totient(n))],
    )


def random_nonzero(rng: random.Random, n: int) -> CycloElem:
    while True:
        u = random_elem(rng, n)
        if not u.is_zero():
            return u
