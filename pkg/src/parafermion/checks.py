"""Verification suites behind the command-line interface.

Each suite appends :class:`CheckReport` objects to a caller-owned list so
that completed checks survive a resource-cap abort, and returns optional
tables for the report.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, List, Optional

from .distinguished import (alpha_singular, lowered_vector, omega_aff, omega_alpha, omega_h,
                            omega_parafermion, parafermion_singular,
                            theta_singular, w3_alpha, weyl_apply)
from .fock import FockSpace, FockVector
from .lie import LieData, build_algebra, root_name, weyl_element, weyl_word_to
from .report import CheckReport, ConfigError, RunConfig, Timer
from .subspaces import (Deadline, GradedBasis, affine_ideal, charge_zero_space, generated_ideal,
                        generated_subalgebra, highest_weight_space, intersect, quotient_dims)
from .vertex import all_monomials, mode_product, primary_check, virasoro_check


@dataclass
class Context:
    """Objects shared by the checks of one command run (built lazily)."""

    config: RunConfig
    deadline: Deadline

    @classmethod
    def from_config(cls, config: RunConfig) -> "Context":
        return cls(config, Deadline(config.time_cap))

    @cached_property
    def lie(self) -> LieData:
        return build_algebra(self.config.algebra, max_rank=self.config.max_rank)

    @cached_property
    def space(self) -> FockSpace:
        return FockSpace(self.lie, self.config.level)

    @property
    def N(self) -> int:
        return self.config.max_weight

    @property
    def cap(self) -> Optional[int]:
        return self.config.bucket_cap

    @cached_property
    def V0(self) -> GradedBasis:
        return charge_zero_space(self.space, self.N, self.cap)

    @cached_property
    def N0(self) -> GradedBasis:
        return highest_weight_space(self.space, self.N, cap=self.cap)

    @cached_property
    def J(self) -> GradedBasis:
        return affine_ideal(self.space, theta_singular(self.space).vector, self.N,
                            self.deadline, self.cap)

    @cached_property
    def I_tilde(self) -> GradedBasis:
        return intersect(self.J, self.N0, "J&N0")

    def echo(self) -> dict:
        return self.config.echo()


def _run(ctx: Context, reports: List[CheckReport], name: str,
         body: Callable[[], tuple]) -> CheckReport:
    """Run body() -> (passed, constants, witness) and record the report."""
    with Timer() as t:
        passed, constants, witness = body()
    rep = CheckReport(name, ctx.echo(), bool(passed), constants,
                      None if passed else (witness or "no witness"), t.elapsed)
    reports.append(rep)
    return rep


def _mismatch_text(mism: List[dict]) -> str:
    return "; ".join(f"weight {m['weight']} charge {m['charge']}: dims {m['dims'][0]} vs {m['dims'][1]}"
                     for m in mism)


def _compare(ctx, reports, name, got: GradedBasis, want: GradedBasis):
    def body():
        mism = got.mismatches(want)
        return (not mism, {"dims": got.dims_by_weight(), "expected_dims": want.dims_by_weight()},
                _mismatch_text(mism))
    return _run(ctx, reports, name, body)


def expected_central_charges(lie: LieData, k: int) -> Dict[str, Fraction]:
    c_aff = Fraction(k * lie.dim, k + lie.dual_coxeter)
    return {"omega_aff": c_aff, "omega_h": Fraction(lie.rank), "omega": c_aff - lie.rank}


def _sl2_coset_charge(K: int) -> Fraction:
    return Fraction(3 * K, K + 2) - 1


# --- graded-dims ------------------------------------------------------------

def graded_dims(ctx: Context, reports: List[CheckReport]) -> dict:
    cols = ["V(k,0)(0)", "N", "I", "K"]
    out: Dict[str, object] = {"columns": cols, "dims": []}

    def body():
        table = quotient_dims(ctx.N0, ctx.I_tilde)
        v0 = ctx.V0.dims_by_weight()
        for w, amb, idl, quo in table.rows:
            out["dims"].append({"weight": w, "V(k,0)(0)": v0[w], "N": amb, "I": idl, "K": quo})
        return True, {c: [r[c] for r in out["dims"]] for c in cols}, None

    _run(ctx, reports, "graded-dims", body)
    return out


# --- check-virasoro ---------------------------------------------------------

def check_virasoro(ctx: Context, reports: List[CheckReport]) -> None:
    if ctx.N < 2:
        raise ConfigError("Virasoro checks need max_weight >= 2")
    space, lie = ctx.space, ctx.lie
    bound = ctx.config.virasoro_bound
    expected = expected_central_charges(lie, space.k)
    everything = all_monomials(space, bound)
    cartan = set(lie.cartan_indices)
    heis = [v for v in everything if all(i in cartan for _, i in next(iter(v.terms)))]
    coset = ctx.N0.all_vectors(bound)

    cases = [(omega_aff(space), everything), (omega_h(space), heis),
             (omega_parafermion(space), coset)]
    for named, trans in cases:
        def body(named=named, trans=trans):
            res = virasoro_check(named.vector, bound, everything, trans)
            want = expected[named.name]
            ok = res.is_virasoro and res.central_charge == want
            witness = str(res.failure) if res.failure else f"c = {res.central_charge}, expected {want}"
            return ok, {"central_charge": res.central_charge, "expected": want,
                        "relations_checked": res.checked}, witness
        _run(ctx, reports, f"virasoro[{named.name}]", body)

    for alpha in lie.positive_roots:
        K = lie.level_rescale(alpha, space.k)

        def body(alpha=alpha, K=K):
            om = omega_alpha(space, alpha).vector
            res = virasoro_check(om, bound, everything)
            # the same coset computed in its own right: A1 at level K
            a1 = FockSpace(build_algebra("A1"), K)
            ref = virasoro_check(omega_parafermion(a1).vector, bound).central_charge
            ok = res.is_virasoro and res.central_charge == ref == _sl2_coset_charge(K)
            witness = str(res.failure) if res.failure else f"c = {res.central_charge}, A1 level {K} gives {ref}"
            return ok, {"central_charge": res.central_charge, "k_alpha": K,
                        "a1_coset_central_charge": ref}, witness
        _run(ctx, reports, f"virasoro[omega_alpha {root_name(alpha)}]", body)

        def primary(alpha=alpha):
            om = omega_alpha(space, alpha).vector
            w3 = w3_alpha(space, alpha).vector
            ok = primary_check(om, w3, 3)
            return ok, {"weight": 3}, None if ok else f"W3_alpha not primary: {w3.to_text()}"
        _run(ctx, reports, f"primary[W3_alpha {root_name(alpha)}]", primary)


# --- check-commutant --------------------------------------------------------

def check_commutant(ctx: Context, reports: List[CheckReport], modes: int = 3) -> None:
    space, lie = ctx.space, ctx.lie
    for alpha in lie.positive_roots:
        for named in (omega_alpha(space, alpha), w3_alpha(space, alpha)):
            def body(named=named):
                for i in lie.cartan_indices:
                    for m in range(modes + 1):
                        img = space.apply_mode(i, m, named.vector)
                        if img:
                            return False, {}, f"{lie.label(i)}({m}) {named.name} = {img.to_text()}"
                return True, {"modes": list(range(modes + 1))}, None
            _run(ctx, reports, f"commutant[{named.name}]", body)


# --- check-generators -------------------------------------------------------

def charge_zero_generators(space: FockSpace) -> List[FockVector]:
    lie = space.lie
    gens = [space.straighten([(i, -1)]) for i in lie.cartan_indices]
    for a in lie.positive_roots:
        neg = tuple(-c for c in a)
        gens.append(space.straighten([(lie.x(neg), -2), (lie.x(a), -1)]))
    return gens


def root_coset_generators(space: FockSpace) -> List[FockVector]:
    out = []
    for a in space.lie.positive_roots:
        out.append(omega_alpha(space, a).vector)
        out.append(w3_alpha(space, a).vector)
    return out


def check_generators(ctx: Context, reports: List[CheckReport]) -> Optional[dict]:
    which = ctx.config.which
    space = ctx.space
    if which == "thm2.1":
        gens = charge_zero_generators(space)
        got = generated_subalgebra(gens, ctx.N, deadline=ctx.deadline, cap=ctx.cap)
        _compare(ctx, reports, "generators[h_i(-1), x_-a(-2)x_a(-1) -> V(k,0)(0)]", got, ctx.V0)
        if ctx.config.truncation_regression:
            truncation_regression(ctx, reports, gens, ctx.V0)
        return None
    gens = root_coset_generators(space)
    if which == "thm3.1":
        got = generated_subalgebra(gens, ctx.N, deadline=ctx.deadline, cap=ctx.cap)
        _compare(ctx, reports, "generators[omega_alpha, W3_alpha -> N]", got, ctx.N0)
        heis = [space.straighten([(i, -1)]) for i in ctx.lie.cartan_indices]
        got = generated_subalgebra(gens + heis, ctx.N, deadline=ctx.deadline, cap=ctx.cap)
        _compare(ctx, reports, "generators[omega_alpha, W3_alpha, h(-1) -> V(k,0)(0)]", got, ctx.V0)
        if ctx.config.truncation_regression:
            truncation_regression(ctx, reports, gens, ctx.N0)
        return None
    # closure in N / I, i.e. on top of the ideal
    ideal = ctx.I_tilde
    got = generated_subalgebra(gens, ctx.N, modulo=ideal, deadline=ctx.deadline, cap=ctx.cap)
    rep = _compare(ctx, reports, "generators[omega_alpha, W3_alpha mod I -> N]", got, ctx.N0)
    rep.constants["quotient_dims"] = quotient_dims(ctx.N0, ideal).quotient_dims
    return None


def truncation_regression(ctx: Context, reports, us: List[FockVector], ambient: GradedBasis,
                          slack: int = 5) -> None:
    """u_n v computed with widened sums must agree with the truncated one."""
    def body():
        vs = ambient.all_vectors()
        count = 0
        for u in us:
            wt_u = u.max_weight()
            for v in vs:
                wt_v = v.max_weight()
                for n in range(wt_u + wt_v - 1 - ctx.N, wt_u + wt_v):
                    count += 1
                    a = mode_product(u, n, v)
                    b = mode_product(u, n, v, slack=slack)
                    if a != b:
                        return False, {}, f"u_{n} v differs with slack {slack}: u={u.to_text()} v={v.to_text()}"
        return True, {"products": count, "slack": slack}, None
    _run(ctx, reports, "truncation-regression", body)


# --- check-ideal ------------------------------------------------------------

def singular_suite(ctx: Context, reports: List[CheckReport]) -> None:
    space, lie = ctx.space, ctx.lie
    k = space.k
    theta = lie.theta
    neg = tuple(-c for c in theta)
    top = theta_singular(space).vector

    def killed():
        img = space.apply_mode(lie.x(theta), 0, top)
        return not img, {}, f"x_theta(0) x_theta(-1)^(k+1)|0> = {img.to_text()}"
    _run(ctx, reports, "singular[x_theta(0) kills]", killed)

    def eigen():
        h = lie.h_alpha(theta)
        img = space.apply_mode(h, 0, top)
        ok = img == top * (2 * (k + 1))
        return ok, {"eigenvalue": 2 * (k + 1)}, f"h_theta(0) v = {img.to_text()}"
    _run(ctx, reports, "singular[h_theta(0) eigenvalue]", eigen)

    def string():
        v = top
        lengths = []
        for i in range(2 * k + 4):
            lengths.append(len(v))
            v = space.apply_mode(lie.x(neg), 0, v)
        nonzero = [i for i, n in enumerate(lengths) if n]
        ok = nonzero == list(range(2 * (k + 1) + 1))
        return ok, {"nonzero_powers": nonzero}, f"nonzero for i in {nonzero}"
    _run(ctx, reports, "singular[sl2 string]", string)

    def annihilated():
        v = parafermion_singular(space).vector
        for i in lie.cartan_indices:
            for m in range(k + 2):
                img = space.apply_mode(i, m, v)
                if img:
                    return False, {}, f"{lie.label(i)}({m}) = {img.to_text()}"
        return True, {"modes": list(range(k + 2))}, None
    _run(ctx, reports, "singular[parafermion annihilated by h(m)]", annihilated)


def check_ideal(ctx: Context, reports: List[CheckReport]) -> dict:
    space, lie = ctx.space, ctx.lie
    singular_suite(ctx, reports)

    gen = parafermion_singular(space).vector
    igen = generated_ideal(gen, ctx.N0, deadline=ctx.deadline)
    _compare(ctx, reports, "ideal[generated == J & N0]", igen, ctx.I_tilde)

    for alpha in lie.positive_roots:
        K = lie.level_rescale(alpha, space.k)

        def member(alpha=alpha, K=K):
            if K + 1 > ctx.N:
                return False, {"k_alpha": K}, f"max weight {ctx.N} below the vector's weight {K + 1}"
            v = alpha_singular(space, alpha)
            in_n0 = ctx.N0.contains(v)
            in_i = ctx.I_tilde.contains(v)
            witness = f"in N0: {in_n0}, in I: {in_i}; v = {v.to_text()}"
            return in_n0 and in_i, {"k_alpha": K, "weight": K + 1}, witness
        _run(ctx, reports, f"ideal[alpha singular {root_name(alpha)} in I]", member)

    return {"columns": ["N", "I", "K"],
            "dims": [{"weight": w, "N": a, "I": i, "K": q}
                     for w, a, i, q in quotient_dims(ctx.N0, ctx.I_tilde).rows]}


# --- check-weyl -------------------------------------------------------------

def _weyl_elements(lie: LieData):
    out = {}
    for i in range(1, lie.rank + 1):
        out[(i,)] = weyl_element(lie, (i,))
    for a in lie.positive_roots:
        if lie.is_long(a):
            word = weyl_word_to(lie, a)
            out.setdefault(word, weyl_element(lie, word))
    return list(out.values())


def _act_on_lattice(sigma, charge):
    lie = sigma.lie
    out = [0] * lie.rank
    for i, c in enumerate(charge):
        if c:
            simple = tuple(int(j == i) for j in range(lie.rank))
            for j, d in enumerate(sigma.act_on_root(simple)):
                out[j] += c * d
    return tuple(out)


def check_weyl(ctx: Context, reports: List[CheckReport]) -> None:
    space, lie = ctx.space, ctx.lie
    k = space.k
    J = ctx.J
    sing = parafermion_singular(space).vector
    for sigma in _weyl_elements(lie):
        tag = "s" + "".join(map(str, sigma.word)) if sigma.word else "id"

        def ideal_map(sigma=sigma):
            for key in J.keys():
                w, ch = key
                target = (w, _act_on_lattice(sigma, ch))
                if J.dim(target) != J.dim(key):
                    return False, {}, f"dim J{key} = {J.dim(key)} but dim J{target} = {J.dim(target)}"
                for v in J.basis(key):
                    img = weyl_apply(sigma, v)
                    if not J.contains(img):
                        return False, {}, f"sigma(v) outside J for v = {v.to_text()}"
            return True, {"buckets": len(J.keys())}, None
        _run(ctx, reports, f"weyl[{tag}: J onto J]", ideal_map)

        def singular_image(sigma=sigma):
            alpha = sigma.act_on_root(lie.theta)
            img = weyl_apply(sigma, sing)
            ref = lowered_vector(space, alpha, k + 1)
            mono, c = next(iter(ref))
            scale = Fraction(img.coefficient(mono)) / c
            ok = bool(scale) and img == ref * scale
            return ok, {"alpha": list(alpha), "scale": scale}, f"sigma(v) = {img.to_text()}"
        _run(ctx, reports, f"weyl[{tag}: singular image]", singular_image)

        def preserves(sigma=sigma):
            for v in ctx.N0.all_vectors():
                img = weyl_apply(sigma, v)
                if not ctx.N0.contains(img):
                    return False, {}, f"sigma(v) outside N0 for v = {v.to_text()}"
            return True, {}, None
        _run(ctx, reports, f"weyl[{tag}: preserves N0]", preserves)


COMMANDS = {
    "graded-dims": graded_dims,
    "check-virasoro": check_virasoro,
    "check-commutant": check_commutant,
    "check-generators": check_generators,
    "check-ideal": check_ideal,
    "check-weyl": check_weyl,
}
