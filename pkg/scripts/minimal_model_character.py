"""Vacuum character of the Virasoro minimal model M(p, p').

Standalone: uses only the Rocha-Caridi formula, nothing from the package.

    q^(c/24 - h) chi_{r,s}(q) = (1/prod_{m>=1}(1 - q^m)) *
        sum_{n in Z} ( q^{A(n)} - q^{B(n)} )

with A(n) = ((2pp'n + pr - p's)^2 - (pr - p's)^2) / (4pp') and
B(n) = ((2pp'n + pr + p's)^2 - (pr - p's)^2) / (4pp').

    python scripts/minimal_model_character.py --p 4 --pp 3 --terms 7
prints 1 0 1 1 2 2 3 (the c = 1/2 Ising vacuum module).
"""
import argparse
from fractions import Fraction


def central_charge(p: int, pp: int) -> Fraction:
    return 1 - Fraction(6 * (p - pp) ** 2, p * pp)


def vacuum_character(p: int, pp: int, terms: int, r: int = 1, s: int = 1):
    """First ``terms`` coefficients of the normalised character of h_{r,s}."""
    numer = [0] * terms
    base = (p * r - pp * s) ** 2
    span = terms + 1
    for n in range(-span, span + 1):
        for sign, shift in ((1, p * r - pp * s), (-1, p * r + pp * s)):
            top = (2 * p * pp * n + shift) ** 2 - base
            if top % (4 * p * pp):
                raise ArithmeticError("non-integral exponent")
            e = top // (4 * p * pp)
            if 0 <= e < terms:
                numer[e] += sign
    # divide by prod (1 - q^m): multiply by the partition generating function
    out = list(numer)
    for m in range(1, terms):
        for i in range(m, terms):
            out[i] += out[i - m]
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=4)
    ap.add_argument("--pp", type=int, default=3)
    ap.add_argument("--terms", type=int, default=7)
    args = ap.parse_args()
    print(f"c = {central_charge(args.p, args.pp)}")
    print(" ".join(map(str, vacuum_character(args.p, args.pp, args.terms))))


if __name__ == "__main__":
    main()
