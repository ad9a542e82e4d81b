"""Finite checks of structural claims about ideal families, with counterexample witnesses.

Each ``verify_*`` function returns a :class:`VerificationReport`. Instances
outside a claim's hypotheses raise :class:`PreconditionViolated` when asked
for directly, and are counted as skipped inside sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import NotAnIdeal, PreconditionViolated
from .family import IdealFamily, enumerate_normalized_ideals, principal_family
from .ideals import (
    NormalizedIdeal,
    format_kunz,
    ideal_add,
    ideal_from_kunz,
    ideal_from_members,
    kunz_sum,
    preceq,
)
from .order import build_order, irreducibles, irreducibles_by_pairs, is_lattice
from .semigroup import NumericalSemigroup, iter_by_genus, ordinary

CLAIMS = (
    "unitary-extension",
    "ordinary-extension",
    "downward-lemma",
    "lattice-threshold",
    "irreducibility",
)


@dataclass
class VerificationReport:
    claim_id: str
    parameters: dict[str, Any]
    status: str = "pass"
    checked: int = 0
    skipped: int = 0
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, witness: dict[str, Any]) -> None:
        # keep the first witness; later failures only flip the status
        self.status = "fail"
        if self.witness is None:
            self.witness = witness

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim_id,
            "parameters": dict(self.parameters),
            "status": self.status,
            "checked": self.checked,
            "skipped": self.skipped,
            "details": dict(self.details),
            "witness": None if self.witness is None else dict(self.witness),
        }

    def to_text(self) -> str:
        lines = [f"claim: {self.claim_id}", "parameters:"]
        lines += [f"  {k}: {_text(v)}" for k, v in self.parameters.items()]
        lines += [
            f"status: {self.status}",
            f"checked: {self.checked}",
            f"skipped: {self.skipped}",
        ]
        if self.details:
            lines.append("details:")
            lines += [f"  {k}: {_text(v)}" for k, v in self.details.items()]
        if self.witness is None:
            lines.append("witness: none")
        else:
            lines.append("witness:")
            lines += [f"  {k}: {_text(v)}" for k, v in self.witness.items()]
        return "\n".join(lines) + "\n"


def _text(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_text(u) for u in v) if v else "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _gens(S: NumericalSemigroup) -> str:
    return ",".join(map(str, S.minimal_generators))


def _k(I: NormalizedIdeal) -> str:
    return format_kunz(I.kunz)


# -- unitary extension ---------------------------------------------------------


def unitary_extension_defects(S: NumericalSemigroup, a: int) -> dict[str, list[str]]:
    """Compare the families of ``S`` and ``S∖{a}`` directly, hypotheses or not.

    Returns the Kunz vectors breaking each part of the statement: ideals of
    ``S`` missing from the larger family, ideals whose membership in the
    difference disagrees with ``x_i = k_i + 1`` or with ``a ∉ I``, and
    difference ideals ``I`` for which ``I + S`` is not ``I ∪ {a}`` or does not
    cover ``I`` under ⪯. ``a`` must be a minimal generator other than the
    multiplicity, so both families share coordinates.
    """
    m = S.multiplicity
    if a not in S.minimal_generators or a == m:
        raise PreconditionViolated(f"{a} must be a minimal generator of {S} other than {m}")
    T = S.remove_generator(a)
    i = a % m
    FS = enumerate_normalized_ideals(S)
    FT = enumerate_normalized_ideals(T)
    small = set(FS.vectors)
    big = set(FT.vectors)
    ki = S.kunz[i - 1]

    defects: dict[str, list[str]] = {
        "missing": [format_kunz(x) for x in FS.vectors if x not in big],
        "difference_not_raised": [],
        "difference_not_avoiding_a": [],
        "sum_not_union": [],
        "not_covered": [],
    }
    if not small < big:
        defects.setdefault("not_strict", ["equal families"])
    order = build_order(FT, "preceq")
    S_in_T = ideal_from_kunz(T, S.kunz)
    for I in FT:
        x = I.kunz
        in_diff = x not in small
        if in_diff != (x[i - 1] == ki + 1):
            defects["difference_not_raised"].append(_k(I))
        if in_diff != (a not in I):
            defects["difference_not_avoiding_a"].append(_k(I))
        if x[i - 1] == ki + 1:
            total = ideal_add(I, S_in_T)
            lowered = x[: i - 1] + (ki,) + x[i:]
            if total.kunz != lowered:
                defects["sum_not_union"].append(_k(I))
            elif FT.index_of(total) not in order.upper_covers[FT.index_of(I)]:
                defects["not_covered"].append(_k(I))
    return {k: v for k, v in defects.items() if v}


def _check_unitary(S: NumericalSemigroup, a: int) -> None:
    m = S.multiplicity
    if a not in S.minimal_generators:
        raise PreconditionViolated(f"{a} is not a minimal generator of {S}")
    if a <= max(m, S.frobenius):
        raise PreconditionViolated(
            f"need a > max(m, F) = {max(m, S.frobenius)} for {S}, got a = {a}"
        )


def verify_unitary_extension(S: NumericalSemigroup, a: int) -> VerificationReport:
    _check_unitary(S, a)
    report = VerificationReport("unitary-extension", {"semigroup": _gens(S), "generator": a})
    defects = unitary_extension_defects(S, a)
    T = S.remove_generator(a)
    report.checked = len(enumerate_normalized_ideals(T))
    if defects:
        report.fail({"semigroup": _gens(S), "generator": a, **defects})
    return report


def _unitary_pairs(g_max: int) -> Iterable[tuple[NumericalSemigroup, int | None]]:
    for S in iter_by_genus(g_max):
        usable = [a for a in S.minimal_generators if a > max(S.multiplicity, S.frobenius)]
        if not usable:
            yield S, None
        for a in usable:
            yield S, a


def sweep_unitary_extension(g_max: int) -> VerificationReport:
    report = VerificationReport("unitary-extension", {"genus_max": g_max})
    for S, a in _unitary_pairs(g_max):
        if a is None:
            report.skipped += 1
            continue
        sub = verify_unitary_extension(S, a)
        report.checked += 1
        if not sub.passed:
            report.fail(sub.witness)
    return report


# -- ordinary extension --------------------------------------------------------


def _transfer(I: NormalizedIdeal, T: NumericalSemigroup) -> NormalizedIdeal:
    """The same set of integers, read as an ideal of ``T``."""
    return ideal_from_members(T, I.members, I.ambient.conductor)


def verify_ordinary_extension(m: int) -> VerificationReport:
    """H_m's ideals sit inside H_{m+1}'s as exactly those with last coordinate 0."""
    if m < 1:
        raise PreconditionViolated("m must be positive")
    Hm, Hn = ordinary(m), ordinary(m + 1)
    Fm = enumerate_normalized_ideals(Hm)
    Fn = enumerate_normalized_ideals(Hn)
    report = VerificationReport("ordinary-extension", {"m": m})
    report.checked = len(Fn)

    embedded = set()
    for I in Fm:
        try:
            embedded.add(_transfer(I, Hn).kunz)
        except NotAnIdeal:
            report.fail({"m": m, "part": "inclusion", "ideal": _k(I)})
    if len(embedded) == len(Fn):
        report.fail({"m": m, "part": "strict", "ideal": "-"})

    Hm_in_Hn = ideal_from_kunz(Hn, (1,) * (m - 1) + (0,))
    low = high = 0
    for I in Fn:
        last = I.kunz[-1]
        low += last == 0
        high += last == 1
        try:
            _transfer(I, Hm)
            belongs = True
        except NotAnIdeal:
            belongs = False
        if belongs != (last == 0) or (I.kunz in embedded) != belongs:
            report.fail({"m": m, "part": "last-coordinate", "ideal": _k(I)})
        if last == 1:
            total = ideal_add(I, Hm_in_Hn)
            if total.kunz != I.kunz[:-1] + (0,):
                report.fail(
                    {"m": m, "part": "sum", "ideal": _k(I), "expected": format_kunz(I.kunz[:-1] + (0,)), "actual": _k(total)}
                )
    report.details = {"small": len(Fm), "large": len(Fn), "last_zero": low, "last_one": high}
    return report


def sweep_ordinary_extension(m_max: int) -> VerificationReport:
    report = VerificationReport("ordinary-extension", {"m_max": m_max})
    for m in range(1, m_max + 1):
        sub = verify_ordinary_extension(m)
        report.checked += 1
        if not sub.passed:
            report.fail(sub.witness)
    return report


# -- downward lemma ------------------------------------------------------------


def _minimal_over(I: NormalizedIdeal, T: NumericalSemigroup, a: int) -> bool:
    """Is ``a`` a ``<=_T``-minimal member of ``I``?"""
    return a in I and not any((a - t) in I for t in T.elements(a + 1) if t > 0)


def downward_triple_check(
    S: NumericalSemigroup, a: int, I: NormalizedIdeal, K: NormalizedIdeal
) -> dict[str, Any]:
    """Evaluate the conclusions of the downward lemma for one pair, without hypotheses.

    ``J = I + K``; the ``*_minus`` ideals are ``I ∖ {a}`` etc. read as ideals of
    ``S ∖ {a}`` (``None`` when ``a`` is not a minimal generator there).
    """
    T = S.remove_generator(a)
    J = ideal_add(I, K)
    bound = max(S.conductor, a + 1)
    tail = ((1 << bound) - 1) ^ ((1 << S.conductor) - 1)

    def minus(X: NormalizedIdeal) -> NormalizedIdeal | None:
        if not _minimal_over(X, T, a):
            return None
        return ideal_from_members(T, (X.members | tail) & ~(1 << a), bound)

    Im, Km, Jm = minus(I), minus(K), minus(J)
    out: dict[str, Any] = {
        "J": _k(J),
        "a_minimal_in_I": Im is not None,
        "a_minimal_in_J": Jm is not None,
        "a_minimal_in_K": Km is not None,
        "I_minus": None if Im is None else _k(Im),
        "K_minus": None if Km is None else _k(Km),
        "J_minus": None if Jm is None else _k(Jm),
    }
    if Im is not None and Km is not None and Jm is not None:
        out["sum_of_minus"] = _k(ideal_add(Im, Km))
        out["sum_identity"] = ideal_add(Im, Km) == Jm
        out["minus_preceq"] = preceq(Im, Jm)
    return out


def _check_downward(S: NumericalSemigroup, a: int) -> None:
    if a not in S.minimal_generators:
        raise PreconditionViolated(f"{a} is not a minimal generator of {S}")
    if a == S.multiplicity or a <= S.frobenius:
        raise PreconditionViolated(
            f"need a != m = {S.multiplicity} and a > F = {S.frobenius} for {S}, got a = {a}"
        )


def verify_downward_lemma(S: NumericalSemigroup, a: int) -> VerificationReport:
    """All pairs ``I, K`` of ideals of ``S`` with ``J = I + K`` and ``a`` minimal in ``I`` and ``J`` over ``S∖{a}``."""
    _check_downward(S, a)
    T = S.remove_generator(a)
    m = S.multiplicity
    i = a % m
    F = enumerate_normalized_ideals(S)
    table = F.sum_table
    minimal = [_minimal_over(I, T, a) for I in F]
    report = VerificationReport("downward-lemma", {"semigroup": _gens(S), "generator": a})

    def raised(x: tuple[int, ...]) -> tuple[int, ...]:
        return x[: i - 1] + (x[i - 1] + 1,) + x[i:]

    failures = 0
    for p, I in enumerate(F):
        if not minimal[p]:
            continue
        for q, K in enumerate(F):
            r = int(table[p, q])
            if not minimal[r]:
                continue
            report.checked += 1
            J = F[r]
            base = {"semigroup": _gens(S), "generator": a, "I": _k(I), "K": _k(K), "J": _k(J)}
            if not minimal[q]:
                failures += 1
                report.fail({**base, "part": "a not minimal in K"})
                continue
            lhs = kunz_sum(raised(I.kunz), raised(K.kunz), m)
            if lhs != raised(J.kunz):
                failures += 1
                report.fail(
                    {
                        **base,
                        "part": "sum identity",
                        "I_minus": format_kunz(raised(I.kunz)),
                        "K_minus": format_kunz(raised(K.kunz)),
                        "expected": format_kunz(raised(J.kunz)),
                        "actual": format_kunz(lhs),
                    }
                )
    report.details = {"failures": failures}
    return report


def sweep_downward_lemma(g_max: int) -> VerificationReport:
    report = VerificationReport("downward-lemma", {"genus_max": g_max})
    triples = failures = 0
    for S, a in _unitary_pairs(g_max):
        if a is None:
            report.skipped += 1
            continue
        sub = verify_downward_lemma(S, a)
        report.checked += 1
        triples += sub.checked
        failures += sub.details["failures"]
        if not sub.passed:
            report.fail(sub.witness)
    report.details = {"triples": triples, "failures": failures}
    return report


# -- lattice threshold ---------------------------------------------------------


def verify_lattice_threshold(g_max: int, threshold: int = 4) -> VerificationReport:
    """``(𝔍₀(S), ⪯)`` is a lattice exactly when ``m(S) <= threshold``."""
    report = VerificationReport("lattice-threshold", {"genus_max": g_max, "threshold": threshold})
    lattices = 0
    for S in iter_by_genus(g_max):
        check = is_lattice(build_order(enumerate_normalized_ideals(S), "preceq"))
        report.checked += 1
        lattices += check.ok
        if check.ok != (S.multiplicity <= threshold):
            w: dict[str, Any] = {
                "semigroup": _gens(S),
                "multiplicity": S.multiplicity,
                "expected_lattice": S.multiplicity <= threshold,
                "lattice": check.ok,
            }
            if not check.ok:
                w["pair"] = [_k(I) for I in check.pair]
                w["direction"] = check.direction
                w["bounds"] = [_k(I) for I in check.bounds]
            report.fail(w)
    report.details = {"lattices": lattices}
    return report


# -- irreducibility ------------------------------------------------------------


def irreducibility_failures(F: IdealFamily) -> list[dict[str, Any]]:
    """Every irreducibility statement that fails on one family (multiplicity at most 4)."""
    S = F.ambient
    m = S.multiplicity
    idx = F.index_of
    plus = {idx(I) for I in irreducibles(F, "plus")}
    joins = {idx(I) for I in irreducibles(F, "join")}
    meets = {idx(I) for I in irreducibles(F, "meet")}
    unions = {idx(I) for I in irreducibles(F, "union")}
    inters = {idx(I) for I in irreducibles(F, "intersection")}
    principal = {idx(I) for I in principal_family(S)}
    bottom = len(F) - 1
    out: list[dict[str, Any]] = []

    def bad(part: str, k: int) -> None:
        out.append({"semigroup": _gens(S), "part": part, "ideal": _k(F[k])})

    for k in sorted(plus - joins):
        bad("plus-irreducible but not join-irreducible", k)
    for k in sorted(inters - meets):
        bad("intersection-irreducible but not meet-irreducible", k)
    for k in sorted(unions ^ (principal | {bottom})):
        bad("union-irreducibles differ from two-generated ideals plus S", k)
    for kind, found in (("join", joins), ("meet", meets)):
        by_pairs = {idx(I) for I in irreducibles_by_pairs(F, kind)}
        for k in sorted(found ^ by_pairs):
            bad(f"{kind}: cover criterion disagrees with definition", k)
    if m == 3:
        order = build_order(F, "preceq")
        for k in range(len(F)):
            if k == bottom:
                continue
            flags = {k in plus, k in joins, k in unions, k in principal}
            if len(flags) != 1:
                bad("multiplicity-3 equivalence", k)
            if k not in plus and not any(order.join_index(p, q) == k for p in plus for q in plus):
                bad("not a join of two plus-irreducibles", k)
    return out


def verify_irreducibility(g_max: int) -> VerificationReport:
    report = VerificationReport("irreducibility", {"genus_max": g_max})
    for S in iter_by_genus(g_max):
        if S.multiplicity > 4:
            report.skipped += 1
            continue
        report.checked += 1
        failures = irreducibility_failures(enumerate_normalized_ideals(S))
        if failures:
            report.fail(failures[0])
    return report


def run_claim(claim: str, **params: Any) -> VerificationReport:
    """Dispatch a claim by id; single instances when ``semigroup``/``generator`` or ``m`` are given."""
    if claim == "unitary-extension":
        if params.get("semigroup") is not None:
            return verify_unitary_extension(params["semigroup"], params["generator"])
        return sweep_unitary_extension(params.get("genus", 7))
    if claim == "downward-lemma":
        if params.get("semigroup") is not None:
            return verify_downward_lemma(params["semigroup"], params["generator"])
        return sweep_downward_lemma(params.get("genus", 7))
    if claim == "ordinary-extension":
        if params.get("m") is not None:
            return verify_ordinary_extension(params["m"])
        return sweep_ordinary_extension(params.get("m_max", 7))
    if claim == "lattice-threshold":
        return verify_lattice_threshold(params.get("genus", 8))
    if claim == "irreducibility":
        return verify_irreducibility(params.get("genus", 8))
    raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
