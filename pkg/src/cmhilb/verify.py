"""Named verification checks mirroring the stated invariants of every
module.  Each check returns a list of failure descriptions (empty means
pass); the CLI runs any subset and reports one line per check.
"""

from __future__ import annotations

import io
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import (
    LaurentPolynomial,
    QPolynomial,
    RationalFunction,
    laurent_as_ratfun,
    ratfun_to_laurent,
)
from .orbits import CALOGERO_MOSER, HILBERT, closure_graph, cm_orbit, hilb_orbit, is_borel_stable, monomial_ideal
from .partitions import (
    Partition,
    all_hooks_odd,
    diagonals,
    dim_irrep,
    enumerate_partitions,
    hook_lengths,
    is_staircase,
    is_steep,
    n_stat,
    staircase,
    transpose,
    triangular_index,
    u_map,
)
from .sl2 import (
    SL2Character,
    decompose,
    exponents,
    irreducible_character,
    layered_fiber_character,
    sl2_fixed_set,
    tangent_character,
    weights_all_odd,
)
from .symfun import (
    centralizer_order,
    character_table,
    fake_degree,
    isotypic_character,
    regular_fiber_character,
)

_SEED = 18436


@dataclass(frozen=True)
class Limits:
    """Size bounds for the checks: max_n caps combinatorial scans, max_m
    caps the staircase index of the character identities."""

    max_n: int = 20
    max_m: int = 4


def _random_laurent(rng, span=6, coeff=9):
    return LaurentPolynomial(
        {rng.randint(-span, span): rng.randint(-coeff, coeff) for _ in range(rng.randint(0, 5))}
    )


def _random_qpoly(rng, degree=4):
    return QPolynomial(
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(0, degree))]
    )


def _random_ratfun(rng):
    den = QPolynomial()
    while den.is_zero:
        den = _random_qpoly(rng)
    return RationalFunction(_random_qpoly(rng), den)


def check_laurent_ring_axioms(limits):
    rng = random.Random(_SEED)
    bad = []
    one = LaurentPolynomial.one()
    zero = LaurentPolynomial.zero()
    for trial in range(40):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        if (a + b) + c != a + (b + c):
            bad.append(f"Laurent addition not associative on trial {trial}")
        if (a * b) * c != a * (b * c):
            bad.append(f"Laurent multiplication not associative on trial {trial}")
        if a * (b + c) != a * b + a * c:
            bad.append(f"Laurent multiplication not distributive on trial {trial}")
        if a * b != b * a or a + b != b + a:
            bad.append(f"Laurent arithmetic not commutative on trial {trial}")
        if a + zero != a or a * one != a:
            bad.append(f"Laurent identities fail on trial {trial}")
    for trial in range(25):
        f, g, h = (_random_ratfun(rng) for _ in range(3))
        if (f + g) + h != f + (g + h) or (f * g) * h != f * (g * h):
            bad.append(f"rational arithmetic not associative on trial {trial}")
        if f * (g + h) != f * g + f * h:
            bad.append(f"rational multiplication not distributive on trial {trial}")
        if f + g != g + f or f * g != g * f:
            bad.append(f"rational arithmetic not commutative on trial {trial}")
        if f and f / f != RationalFunction(1):
            bad.append(f"f/f is not 1 on trial {trial}")
    return bad


def check_ratfun_roundtrip(limits):
    rng = random.Random(_SEED + 1)
    bad = []
    for trial in range(60):
        p = _random_laurent(rng)
        if ratfun_to_laurent(laurent_as_ratfun(p)) != p:
            bad.append(f"Laurent round trip failed for {p}")
        f = _random_ratfun(rng)
        k = _random_qpoly(rng)
        if not k.is_zero:
            blown = RationalFunction(f.numerator * k, f.denominator * k)
            if blown != f:
                bad.append(f"reduction not canonical on trial {trial}")
        again = RationalFunction(f.numerator, f.denominator)
        if again != f:
            bad.append(f"normalization not idempotent on trial {trial}")
    return bad


def check_partition_involutions(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            lamt = transpose(lam)
            if transpose(lamt) != lam:
                bad.append(f"transpose not an involution at {lam}")
            if hook_lengths(lamt) != hook_lengths(lam):
                bad.append(f"hook multiset changed under transpose at {lam}")
            if lamt.size != n:
                bad.append(f"transpose changed the size of {lam}")
    return bad


def check_diagonal_u_map(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            d = diagonals(lam)
            if sum(d) != n:
                bad.append(f"diagonals of {lam} do not sum to {n}")
            if any(dk <= 0 for dk in d):
                bad.append(f"diagonals of {lam} contain a nonpositive entry")
            u = u_map(lam)
            if u.size != n:
                bad.append(f"u_map changed the size of {lam}")
            if not is_steep(u):
                bad.append(f"u_map({lam}) = {u} is not steep")
            if (u == lam) != is_steep(lam):
                bad.append(f"u_map fixes {lam} but steepness says otherwise")
            if u_map(u) != u:
                bad.append(f"u_map not idempotent at {lam}")
            if (is_staircase(u)) != is_staircase(lam):
                bad.append(f"u_map({lam}) hits the staircase unexpectedly")
    return bad


def check_odd_hooks_staircase(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            if all_hooks_odd(lam) != is_staircase(lam):
                bad.append(f"odd-hook criterion disagrees with staircase test at {lam}")
    return bad


def check_staircase_n_stat(limits):
    bad = []
    for m in range(11):
        expected = (m - 1) * m * (m + 1) // 6
        got = n_stat(staircase(m))
        if got != expected:
            bad.append(f"n(staircase({m})) = {got}, expected {expected}")
    return bad


def check_dimension_squares(limits):
    bad = []
    for n in range(min(limits.max_n, 12) + 1):
        total = sum(dim_irrep(lam) ** 2 for lam in enumerate_partitions(n))
        if total != factorial(n):
            bad.append(f"sum of squared dimensions at n={n} is {total}, not {n}!")
    return bad


def check_character_orthogonality(limits):
    bad = []
    for n in range(1, min(limits.max_n, 15) + 1):
        table = character_table(n)
        parts = table.partitions
        weights = [factorial(n) // centralizer_order(mu) for mu in parts]
        for i, lam in enumerate(parts):
            for nu in parts[: i + 1]:
                total = sum(
                    w * table.value(lam, mu) * table.value(nu, mu)
                    for w, mu in zip(weights, parts)
                )
                expected = factorial(n) if lam == nu else 0
                if total != expected:
                    bad.append(f"orthogonality fails for ({lam}), ({nu}) at n={n}")
        for lam in parts:
            if table.value(lam, Partition((1,) * n)) != dim_irrep(lam):
                bad.append(f"character at the identity is not the dimension for {lam}")
    return bad


def check_fake_degree(limits):
    bad = []
    for n in range(min(limits.max_n, 12) + 1):
        for lam in enumerate_partitions(n):
            f = fake_degree(lam)
            if any(c < 0 for _, c in f.sorted_terms()):
                bad.append(f"fake degree of {lam} has a negative coefficient")
            if f and f.min_exponent() < 0:
                bad.append(f"fake degree of {lam} has a negative exponent")
            if f.evaluate(1) != dim_irrep(lam):
                bad.append(f"fake degree of {lam} does not sum to the dimension")
    return bad


def check_regular_fiber_decomposition(limits):
    bad = []
    for m in range(1, limits.max_m + 1):
        n = m * (m + 1) // 2
        full = regular_fiber_character(m)
        if full.evaluate(1) != factorial(n):
            bad.append(f"fiber dimension at m={m} is not {n}!")
        total = LaurentPolynomial.zero()
        for lam in enumerate_partitions(n, cap=max(n, 30)):
            total = total + isotypic_character(lam).scaled(dim_irrep(lam))
        if total != full:
            bad.append(f"sum of dim * isotypic characters misses the fiber at m={m}")
    return bad


def check_isotypic_characters(limits):
    bad = []
    for m in range(limits.max_m + 1):
        n = m * (m + 1) // 2
        for lam in enumerate_partitions(n, cap=max(n, 30)):
            chi = isotypic_character(lam)
            if not chi.is_palindromic():
                bad.append(f"isotypic character of {lam} is not palindromic")
            if any(c < 0 for _, c in chi.sorted_terms()):
                bad.append(f"isotypic character of {lam} has a negative coefficient")
            if chi.evaluate(1) != dim_irrep(lam):
                bad.append(f"isotypic character of {lam} has the wrong dimension")
            if chi != isotypic_character(transpose(lam)):
                bad.append(f"isotypic character changes under transpose at {lam}")
    return bad


def check_sl2_decompose_roundtrip(limits):
    rng = random.Random(_SEED + 2)
    bad = []
    for trial in range(60):
        char = SL2Character(
            {rng.randint(0, 8): rng.randint(1, 4) for _ in range(rng.randint(0, 5))}
        )
        if decompose(char.to_laurent()) != char:
            bad.append(f"decompose does not invert reconstruction on trial {trial}")
        if char.to_laurent().evaluate(1) != char.dimension():
            bad.append(f"dimension disagrees with value at q=1 on trial {trial}")
    try:
        decompose(LaurentPolynomial({1: 1, -1: 1, 0: -1}))
        bad.append("a non-character was decomposed without complaint")
    except Exception:
        pass
    return bad


def check_fiber_layer_factorization(limits):
    bad = []
    for m in range(1, limits.max_m + 1):
        if layered_fiber_character(m) != regular_fiber_character(m):
            bad.append(f"layered factorization misses the fiber character at m={m}")
    return bad


def check_tangent_factorization(limits):
    bad = []
    for m in range(1, 9):
        lhs = tangent_character(staircase(m))
        rhs = irreducible_character(m) * irreducible_character(m - 1)
        if lhs != rhs:
            bad.append(f"staircase tangent character does not factor at m={m}")
    return bad


def check_exponent_duality(limits):
    bad = []
    for m in range(limits.max_m + 1):
        n = m * (m + 1) // 2
        for lam in enumerate_partitions(n, cap=max(n, 30)):
            e = exponents(lam)
            if e != exponents(transpose(lam)):
                bad.append(f"exponents change under transpose at {lam}")
            if sum(x + 1 for x in e) != dim_irrep(lam):
                bad.append(f"exponent dimension count fails at {lam}")
    return bad


def check_odd_weight_fixed_points(limits):
    bad = []
    for n in range(1, min(limits.max_n, 21) + 1):
        m = triangular_index(n)
        fixed = sl2_fixed_set(n)
        expected = {staircase(m)} if m is not None else set()
        if fixed != expected:
            found = sorted(str(lam) for lam in fixed)
            bad.append(f"odd-weight fixed set at n={n} is {found}")
        for lam in enumerate_partitions(n):
            if weights_all_odd(tangent_character(lam)) != is_staircase(lam):
                bad.append(f"odd-weight criterion disagrees with staircase at {lam}")
    return bad


def check_borel_stability(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            if is_borel_stable(lam) != is_steep(lam):
                bad.append(f"derivation stability disagrees with steepness at {lam}")
    return bad


_W0_CONJUGATE = {"SL2": "SL2", "B": "B_minus", "B_minus": "B", "T": "T", "N_T": "N_T"}


def check_hilbert_orbit_classification(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            rep = hilb_orbit(lam)
            lamt = transpose(lam)
            steep_side = is_steep(lam) or is_steep(lamt)
            if rep.closed != steep_side:
                bad.append(f"closedness disagrees with steepness at {lam}")
            if is_staircase(lam):
                expected = "SL2"
            elif is_steep(lam):
                expected = "B"
            elif is_steep(lamt):
                expected = "B_minus"
            elif lam == lamt:
                expected = "N_T"
            else:
                expected = "T"
            if rep.stabilizer != expected:
                bad.append(f"stabilizer at {lam} is {rep.stabilizer}, expected {expected}")
            if rep.closed and rep.boundary is not None:
                bad.append(f"closed orbit at {lam} reports a boundary")
            if not rep.closed and rep.boundary != u_map(lam):
                bad.append(f"boundary at {lam} is not the rectification")
            mirror = hilb_orbit(lamt)
            if mirror.stabilizer != _W0_CONJUGATE[rep.stabilizer]:
                bad.append(f"transpose stabilizer at {lam} is not the conjugate")
    return bad


def check_closure_edges(limits):
    bad = []
    for n in range(1, min(limits.max_n, 30) + 1):
        graph = closure_graph(n, HILBERT)
        for src, dst in graph.edges:
            if not is_steep(dst):
                bad.append(f"closure edge {src} -> {dst} targets a non-steep partition")
            if is_staircase(dst):
                bad.append(f"closure edge {src} -> {dst} targets the staircase")
            if dst.size != src.size:
                bad.append(f"closure edge {src} -> {dst} changes the size")
            if is_steep(src) or is_steep(transpose(src)):
                bad.append(f"closed orbit {src} has an outgoing edge")
        cm_graph = closure_graph(n, CALOGERO_MOSER)
        if cm_graph.edges:
            bad.append(f"Calogero-Moser closure graph at n={n} has edges")
    return bad


def check_cm_orbit_classification(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            rep = cm_orbit(lam)
            lamt = transpose(lam)
            if not rep.closed:
                bad.append(f"Calogero-Moser orbit at {lam} is not closed")
            if (rep.stabilizer == "SL2") != is_staircase(lam):
                bad.append(f"point stabilizer SL2 misassigned at {lam}")
            if lam != lamt:
                if rep.stabilizer != "T" or rep.partner != lamt:
                    bad.append(f"shared orbit with the transpose misreported at {lam}")
            elif not is_staircase(lam) and rep.stabilizer != "N_T":
                bad.append(f"self-transpose stabilizer misreported at {lam}")
    return bad


def check_monomial_ideal_dims(limits):
    bad = []
    for n in range(min(limits.max_n, 30) + 1):
        for lam in enumerate_partitions(n):
            ideal = monomial_ideal(lam)
            d = diagonals(lam)
            for k in range(len(ideal.graded_dims)):
                dk = d[k] if k < len(d) else 0
                expected = k + 1 - dk
                if ideal.graded_dim(k) != expected or expected < 0:
                    bad.append(f"graded dimension at {lam}, degree {k} is off")
            if sum(d) != n:
                bad.append(f"codimension of the ideal at {lam} is not {n}")
            for a, b in ideal.generators:
                if a < len(lam.parts) and b < lam.parts[a]:
                    bad.append(f"generator ({a},{b}) of {lam} lies inside the diagram")
    return bad


def check_cli_json_roundtrip(limits):
    from .cli import main

    bad = []
    commands = [
        ["part", "info", "4,3,3,1,1", "--format", "json"],
        ["cm", "orbit", "3,1", "--format", "json"],
        ["cm", "exponents", "6", "--format", "json"],
        ["cm", "char-L", "2", "--format", "json"],
        ["cm", "tangent", "2,1", "--format", "json"],
        ["cm", "fixed", "7", "--format", "json"],
        ["hilb", "orbit", "2,2", "--format", "json"],
        ["hilb", "ideal", "2,1", "--format", "json"],
        ["hilb", "closure", "4", "--format", "json"],
    ]
    import contextlib

    for argv in commands:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv)
        if code != 0:
            bad.append(f"command {' '.join(argv)} exited with {code}")
            continue
        try:
            parsed = json.loads(buf.getvalue())
        except json.JSONDecodeError:
            bad.append(f"command {' '.join(argv)} did not emit valid JSON")
            continue
        if json.loads(json.dumps(parsed, sort_keys=True)) != parsed:
            bad.append(f"command {' '.join(argv)} JSON does not round trip")
    return bad


CHECKS = {
    "laurent-ring-axioms": check_laurent_ring_axioms,
    "ratfun-roundtrip": check_ratfun_roundtrip,
    "partition-involutions": check_partition_involutions,
    "diagonal-u-map": check_diagonal_u_map,
    "odd-hooks-staircase": check_odd_hooks_staircase,
    "staircase-n-stat": check_staircase_n_stat,
    "dimension-squares": check_dimension_squares,
    "character-orthogonality": check_character_orthogonality,
    "fake-degree": check_fake_degree,
    "regular-fiber-decomposition": check_regular_fiber_decomposition,
    "isotypic-characters": check_isotypic_characters,
    "sl2-decompose-roundtrip": check_sl2_decompose_roundtrip,
    "fiber-layer-factorization": check_fiber_layer_factorization,
    "tangent-factorization": check_tangent_factorization,
    "exponent-duality": check_exponent_duality,
    "odd-weight-fixed-points": check_odd_weight_fixed_points,
    "borel-stability": check_borel_stability,
    "hilbert-orbit-classification": check_hilbert_orbit_classification,
    "closure-edges": check_closure_edges,
    "cm-orbit-classification": check_cm_orbit_classification,
    "monomial-ideal-dims": check_monomial_ideal_dims,
    "cli-json-roundtrip": check_cli_json_roundtrip,
}


def run_checks(names, limits: Limits, out=print) -> bool:
    """Run the selected checks in declaration order; report one line per
    check and return True when all of them pass."""
    selected = list(CHECKS) if "all" in names else list(names)
    ok = True
    passed = 0
    for name in selected:
        failures = CHECKS[name](limits)
        if failures:
            ok = False
            extra = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
            out(f"FAIL {name}: {failures[0]}{extra}")
        else:
            passed += 1
            out(f"PASS {name}")
    out(f"{passed}/{len(selected)} checks passed")
    return ok
