"""The small named lattices used throughout the tests and docs."""
from .core import Lattice, build_lattice


def chain1() -> Lattice:
    return build_lattice(["0"], [])


def chain2() -> Lattice:
    return build_lattice(["0", "1"], [("0", "1")])


def chain3() -> Lattice:
    return build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])


def b2() -> Lattice:
    return build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def m3() -> Lattice:
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def n5() -> Lattice:
    # 0 < c < a < 1, 0 < b < 1
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "c"), ("c", "a"), ("a", "1"), ("0", "b"), ("b", "1")],
    )


NAMED = {
    "CHAIN1": chain1,
    "CHAIN2": chain2,
    "CHAIN3": chain3,
    "B2": b2,
    "M3": m3,
    "N5": n5,
}
