# -*- coding: utf-8 -*-
"""
Katalog tożsamości sprawdzanych w arytmetyce dokładnej.

Lewa i prawa strona każdej tożsamości liczona jest niezależnym kodem:
LHS zawsze bezpośrednią sumą dwumianów (Fraction), RHS przez postać zamkniętą
z modułów fib/formulas. Postaci z sufiksem `_literal` to wersje bez poprawki; dla części parametrów
są fałszywe i suite to wykazuje.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Sequence, Tuple, Union

from reiscount.core.dyadic import HalfIndex
from reiscount.core.errors import DomainError, UnknownIdentityError
from reiscount.core.fib import (
    fib_type1,
    fib_type1_binomial,
    fib_type2,
    fib_type2_binomial,
    fib_type2_binomial_literal,
)
from reiscount.core.numtheory import binomial, common_divisors, divisors, euler_phi
from reiscount.counting import formulas as F

Number = Union[int, Fraction]
Params = Dict[str, int]


@dataclass
class IdentityResult:
    name: str
    params: Params
    lhs: Number
    rhs: Number
    relation: str = "eq"
    holds: bool = field(init=False)

    def __post_init__(self) -> None:
        equal = Fraction(self.lhs) == Fraction(self.rhs)
        self.holds = equal if self.relation == "eq" else not equal

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class _Identity:
    params: Tuple[str, ...]
    evaluate: Callable[..., Tuple[Number, Number]]
    relation: str = "eq"
    min_value: int = 1
    description: str = ""


# ---------------------------------------------------------------------------
# Strony tożsamości
# ---------------------------------------------------------------------------

def _reflective_binomial_sum(n: int) -> Tuple[Number, Number]:
    lhs = sum(binomial(HalfIndex.of(k).floor_k(n), k // 2) for k in range(1, n + 1))
    return lhs, (F.beta_refl(n) - 1).as_fraction()


def _necklace_binomial_sum(n: int) -> Tuple[Number, Number]:
    lhs = sum(
        Fraction(sum(euler_phi(d) * binomial(n // d - 1, k // d - 1) for d in common_divisors(n, k)), k)
        for k in range(1, n + 1)
    )
    rhs = -1 + Fraction(sum(euler_phi(d) * 2 ** (n // d) for d in divisors(n)), n)
    return lhs, rhs


def _hyperbola_lhs(n: int, signed: bool) -> int:
    total = 0
    for k in range(1, n + 1):
        for d in common_divisors(n, k):
            sign = (-1) ** (k + k // d) if signed else 1
            total += sign * euler_phi(d) * binomial(n // d, k // d)
    return total


def _hyperbola_rhs(n: int) -> int:
    return sum(euler_phi(d) * (2 ** (n // d) - 1) for d in divisors(n))


def _necklace_hyperbola_sum(n: int) -> Tuple[Number, Number]:
    return _hyperbola_lhs(n, signed=False), _hyperbola_rhs(n)


def _signed_necklace_sum_literal(n: int) -> Tuple[Number, Number]:
    return _hyperbola_lhs(n, signed=True), _hyperbola_rhs(n)


def _signed_necklace_sum(n: int) -> Tuple[Number, Number]:
    # dzielniki parzyste wnoszą φ(d)·Σ_{j≥1}(−1)^j C(n/d, j) = −φ(d)
    rhs = sum(
        euler_phi(d) * (2 ** (n // d) - 1) if d % 2 else -euler_phi(d)
        for d in divisors(n)
    )
    return _hyperbola_lhs(n, signed=True), rhs


def _signed_sum_odd_terms(n: int) -> Tuple[Number, Number]:
    signed = unsigned = 0
    for k in range(1, n + 1, 2):
        for d in common_divisors(n, k):
            term = euler_phi(d) * binomial(n // d, k // d)
            signed += (-1) ** (k + k // d) * term
            unsigned += term
    return signed, unsigned


def _total_classes(n: int) -> Tuple[Number, Number]:
    return F.lambda_total(n), (F.alpha_total(n) - 1).as_fraction()


def _fib1_binomial(m: int, n: int) -> Tuple[Number, Number]:
    return fib_type1_binomial(m, n), fib_type1(m, n)


def _fib2_binomial(m: int, n: int) -> Tuple[Number, Number]:
    return fib_type2_binomial(m, n), fib_type2(m, n)


def _fib2_binomial_literal(m: int, n: int) -> Tuple[Number, Number]:
    return fib_type2_binomial_literal(m, n), fib_type2(m, n)


def _fib2_shift_literal(m: int, n: int) -> Tuple[Number, Number]:
    if m % 2 == 0:
        raise DomainError("fib2_shift_literal is stated for odd m only")
    return fib_type2(m, n), fib_type1(m, n + (m + 1) // 2)


def _reflective_gap_lhs(n: int, m: int) -> int:
    return sum(binomial(HalfIndex.of(k, m).floor_k(n - m * k), k // 2) for k in range(1, n + 1))


def _reflective_gap_sum(n: int, m: int) -> Tuple[Number, Number]:
    return _reflective_gap_lhs(n, m), F.gap_refl_total(n, m)


def _reflective_gap_sum_literal(n: int, m: int) -> Tuple[Number, Number]:
    return _reflective_gap_lhs(n, m), fib_type2(m, HalfIndex.of(0, m).floor_m(n)) - 1


def _necklace_gap_lhs(n: int, m: int) -> Fraction:
    total = Fraction(0)
    for k in range(1, n // (m + 1) + 1):
        inner = sum(
            euler_phi(d) * binomial((n - m * k) // d - 1, k // d - 1) for d in common_divisors(n, k)
        )
        total += Fraction(inner, k)
    return total


def _necklace_gap_rhs(n: int, m: int, *, literal: bool) -> Fraction:
    total = 0
    for d in divisors(n):
        if d > n // (m + 1):
            break
        q = n // d
        second = fib_type1(m, q) if literal else fib_type1(m, q - 1)
        total += euler_phi(d) * ((m + 1) * fib_type1(m, q) - m * second - 1)
    return Fraction(total, n)


def _necklace_gap_sum(n: int, m: int) -> Tuple[Number, Number]:
    return _necklace_gap_lhs(n, m), _necklace_gap_rhs(n, m, literal=False)


def _necklace_gap_sum_literal(n: int, m: int) -> Tuple[Number, Number]:
    return _necklace_gap_lhs(n, m), _necklace_gap_rhs(n, m, literal=True)


def _even_part_for_zero_gap(n: int) -> int:
    """Σ_{k=2,4,...} C(⌊n/2⌋, k/2) – lewa strona dla m = 0 po odjęciu części nieparzystej."""
    return sum(binomial(n // 2, j) for j in range(1, n // 2 + 1))


def _no_zero_gap_extension(n1: int, n2: int) -> Tuple[Number, Number]:
    """
    Dla m = 0 część parzysta musiałaby być funkcją g(⌊(n−1)/2⌋). Zwraca
    (g z n1, g z n2); relacja "ne": wartości różne przy tym samym argumencie
    oznaczają, że rozszerzenie jest sprzeczne.
    """
    if (n1 - 1) // 2 != (n2 - 1) // 2:
        raise DomainError(f"n1={n1} and n2={n2} do not share floor((n-1)/2)")
    return _even_part_for_zero_gap(n1), _even_part_for_zero_gap(n2)


IDENTITIES: Dict[str, _Identity] = {
    "reflective_binomial_sum": _Identity(("n",), _reflective_binomial_sum,
                                         description="sum_k C(floor((n-h_k)/2), floor(k/2)) = beta_n - 1"),
    "necklace_binomial_sum": _Identity(("n",), _necklace_binomial_sum,
                                       description="sum_k (1/k) sum_d phi(d) C(n/d-1, k/d-1) = -1 + (1/n) sum_d phi(d) 2^(n/d)"),
    "necklace_hyperbola_sum": _Identity(("n",), _necklace_hyperbola_sum,
                                        description="sum_k sum_d phi(d) C(n/d, k/d) = sum_d phi(d)(2^(n/d) - 1)"),
    "signed_necklace_sum": _Identity(("n",), _signed_necklace_sum,
                                     description="signed hyperbola sum; even d contribute -phi(d)"),
    "signed_necklace_sum_literal": _Identity(("n",), _signed_necklace_sum_literal,
                                             description="signed hyperbola sum = sum_d phi(d)(2^(n/d) - 1), uncorrected (odd n only)"),
    "signed_sum_odd_terms": _Identity(("n",), _signed_sum_odd_terms,
                                      description="signed and unsigned sums agree on odd k"),
    "total_classes": _Identity(("n",), _total_classes, description="lambda_n = alpha_n - 1"),
    "fib1_binomial": _Identity(("m", "n"), _fib1_binomial, min_value=0,
                               description="F^(m)_n = sum_k C(n - mk, k)"),
    "fib2_binomial": _Identity(("m", "n"), _fib2_binomial, min_value=0,
                               description="f^(m)_n = F^(m)_n + F^(m)_(n - ceil(m/2))"),
    "fib2_binomial_literal": _Identity(("m", "n"), _fib2_binomial_literal, min_value=0,
                                       description="parity-split binomial form, uncorrected (m = 1 only)"),
    "fib2_shift_literal": _Identity(("m", "n"), _fib2_shift_literal, min_value=0,
                                    description="f^(m)_n = F^(m)_(n+(m+1)/2) for odd m, uncorrected (m = 1 only)"),
    "reflective_gap_sum": _Identity(("n", "m"), _reflective_gap_sum,
                                    description="sum_k C(floor((n-mk-h_k)/2), floor(k/2)) = F_(n//2) + F_((n-m-1)//2) - 1"),
    "reflective_gap_sum_literal": _Identity(("n", "m"), _reflective_gap_sum_literal,
                                            description="same sum = f^(m)_(floor((n-gamma_m)/2)) - 1, uncorrected"),
    "necklace_gap_sum": _Identity(("n", "m"), _necklace_gap_sum,
                                  description="gap necklace sum with m*F^(m)_(n/d-1)"),
    "necklace_gap_sum_literal": _Identity(("n", "m"), _necklace_gap_sum_literal,
                                          description="gap necklace sum with m*F^(m)_(n/d), uncorrected"),
    "no_zero_gap_extension": _Identity(("n1", "n2"), _no_zero_gap_extension, relation="ne",
                                       description="m = 0 forces g(1) = 1 (n=3) and g(1) = 3 (n=4)"),
}


def identity_names() -> List[str]:
    return sorted(IDENTITIES)


def _bind(name: str, ident: _Identity, params: Union[Mapping[str, int], Sequence[int]]) -> Params:
    if isinstance(params, Mapping):
        missing = [p for p in ident.params if p not in params]
        if missing:
            raise DomainError(f"{name}: missing parameters {missing}")
        bound = {p: int(params[p]) for p in ident.params}
    else:
        values = list(params)
        if len(values) != len(ident.params):
            raise DomainError(f"{name}: expected parameters {ident.params}, got {values}")
        bound = dict(zip(ident.params, (int(v) for v in values)))
    for key, value in bound.items():
        floor = ident.min_value if key == "n" else 1
        if value < floor:
            raise DomainError(f"{name}: {key} must be >= {floor}, got {value}")
    return bound


def evaluate_identity(name: str, params: Union[Mapping[str, int], Sequence[int]]) -> IdentityResult:
    ident = IDENTITIES.get(name)
    if ident is None:
        raise UnknownIdentityError(f"unknown identity: {name!r} (known: {', '.join(identity_names())})")
    bound = _bind(name, ident, params)
    lhs, rhs = ident.evaluate(**bound)
    return IdentityResult(name=name, params=bound, lhs=lhs, rhs=rhs, relation=ident.relation)


def check_identity(name: str, params: Union[Mapping[str, int], Sequence[int]]) -> bool:
    return evaluate_identity(name, params).holds
