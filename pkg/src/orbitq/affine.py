"""Affine weights at admissible level and the window check for lambda-hat_q.

Real affine roots alpha + n delta are enumerated only for |n| <= N.  The
finite part of every weight lives in simple-root coordinates, as in
``rootsys``; the delta coefficient of a weight never enters a pairing with
a real coroot and is carried along only for bookkeeping.

``verify_prop_2_4`` checks, on the window, that lambda-hat_q is regular
dominant and that its integral root system is the translate t_{-mu} of the
integral root system of k Lambda_0, with mu built from a Bezout identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator

from .integral_roots import lambda_q
from .orbits import PRINCIPAL, case_for
from .rootsys import CartanType, Root, RootSystem, Weight, build


class AdmissibilityError(ValueError):
    pass


@dataclass(frozen=True)
class AffineWeight:
    finite: Weight
    k: Fraction  # coefficient of Lambda_0, i.e. the level
    delta_coeff: Fraction = Fraction(0)

    def pair_K(self) -> Fraction:
        return self.k

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a + b for a, b in zip(self.finite, other.finite)),
                            self.k + other.k, self.delta_coeff + other.delta_coeff)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a - b for a, b in zip(self.finite, other.finite)),
                            self.k - other.k, self.delta_coeff - other.delta_coeff)

    def scaled(self, c) -> "AffineWeight":
        c = Fraction(c)
        return AffineWeight(tuple(c * a for a in self.finite), c * self.k, c * self.delta_coeff)


@dataclass(frozen=True)
class AffineRealRoot:
    finite_root: Root
    n: int

    def is_positive(self, rs: RootSystem) -> bool:
        return self.n > 0 or (self.n == 0 and rs.is_positive(self.finite_root))


@dataclass(frozen=True)
class AdmissibleLevel:
    ct: CartanType
    p: int
    q: int

    def __post_init__(self):
        if not is_admissible_number(self.ct, self.p, self.q):
            raise AdmissibilityError(f"k = -h^vee + {self.p}/{self.q} is not admissible for {self.ct}")

    @property
    def k(self) -> Fraction:
        return Fraction(self.p, self.q) - build(self.ct).dual_coxeter_number


def is_admissible_number(ct: CartanType, p: int, q: int) -> bool:
    if p < 1 or q < 1:
        raise AdmissibilityError("p and q must be positive")
    rs = build(ct)
    if gcd(p, q) != 1:
        return False
    bound = rs.dual_coxeter_number if gcd(q, rs.lacing) == 1 else rs.coxeter_number
    return p >= bound


def rho_hat(rs: RootSystem) -> AffineWeight:
    return AffineWeight(rs.rho, Fraction(rs.dual_coxeter_number))


def affine_pairing(rs: RootSystem, w: AffineWeight, r: AffineRealRoot) -> Fraction:
    """<w, (alpha + n delta)^vee> = 2/(alpha|alpha) * [(w|alpha) + n k]."""
    a = r.finite_root
    return 2 * (rs.form(w.finite, a) + r.n * w.k) / rs.norm2(a)


def in_coweight_lattice(rs: RootSystem, beta: Weight) -> bool:
    """beta is an integral combination of fundamental coweights iff every (beta|alpha_i) is an integer."""
    simple = [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    return all(Fraction(rs.form(beta, s)).denominator == 1 for s in simple)


def translate(rs: RootSystem, beta: Weight, r: AffineRealRoot) -> AffineRealRoot:
    """t_beta(alpha + n delta) = alpha + (n - (alpha|beta)) delta."""
    if not in_coweight_lattice(rs, beta):
        raise AdmissibilityError(f"{beta} is not in the coweight lattice")
    shift = Fraction(rs.form(beta, r.finite_root))
    return AffineRealRoot(r.finite_root, r.n - int(shift))


def window_roots(rs: RootSystem, N: int) -> Iterator[AffineRealRoot]:
    for n in range(-N, N + 1):
        for a in rs.roots:
            yield AffineRealRoot(a, n)


def k_lambda0_plus_rho(level: AdmissibleLevel) -> AffineWeight:
    rs = build(level.ct)
    return AffineWeight(rs.rho, Fraction(level.p, level.q))


def lambda_hat_q_plus_rho(level: AdmissibleLevel) -> AffineWeight:
    """(rho + p Lambda_0)/q when (q, r) = 1, else (rho_check + p Lambda_0)/q."""
    rs = build(level.ct)
    top = rs.rho if case_for(rs.lacing, level.q) == PRINCIPAL else rs.rho_check
    return AffineWeight(top, Fraction(level.p)).scaled(Fraction(1, level.q))


def lambda_hat_q(level: AdmissibleLevel) -> AffineWeight:
    return lambda_hat_q_plus_rho(level) - rho_hat(build(level.ct))


def bezout_solutions(level: AdmissibleLevel, count: int = 2) -> list[tuple[int, int]]:
    """Distinct (c, d) with c r p + d q = -1 (principal) or c p - d q = -1 (coprincipal)."""
    rs = build(level.ct)
    p, q = level.p, level.q
    a = rs.lacing * p if case_for(rs.lacing, q) == PRINCIPAL else p
    c0 = (-pow(a, -1, q)) % q if q > 1 else 0
    out = []
    for t in range(count):
        c = c0 + t * q
        if case_for(rs.lacing, q) == PRINCIPAL:
            d, rem = divmod(-1 - c * a, q)
        else:
            d, rem = divmod(c * p + 1, q)
        assert rem == 0
        out.append((c, d))
    return out


def mu_for(level: AdmissibleLevel, c: int) -> Weight:
    rs = build(level.ct)
    if case_for(rs.lacing, level.q) == PRINCIPAL:
        return tuple(c * rs.lacing * x for x in rs.rho)
    return tuple(c * x for x in rs.rho_check)


def expected_in_k_lambda0(rs: RootSystem, q: int, r: AffineRealRoot) -> bool:
    """Closed description of the integral roots of k Lambda_0 at denominator q."""
    if case_for(rs.lacing, q) == PRINCIPAL or rs.is_long(r.finite_root):
        return r.n % q == 0
    return r.n % (q // rs.lacing) == 0


@dataclass
class WindowReport:
    ct: CartanType
    p: int
    q: int
    window: int
    case_tag: str
    bezout: list[tuple[int, int]]
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and not self.failures

    def _record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {detail}")


def _integral(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


def verify_prop_2_4(ct: CartanType, p: int, q: int, window: int | None = None) -> WindowReport:
    level = AdmissibleLevel(ct, p, q)
    N = 3 * q if window is None else window
    if N < 3 * q:
        raise ValueError(f"window {N} is smaller than 3q = {3 * q}")
    rs = build(ct)
    case = case_for(rs.lacing, q)
    rep = WindowReport(ct, p, q, N, case, bezout_solutions(level))
    lam = lambda_hat_q_plus_rho(level)
    base = k_lambda0_plus_rho(level)
    if rep.bezout[0] == rep.bezout[1]:
        rep._record("bezout distinct", False, str(rep.bezout))

    # consistency with the finite weight lambda_q
    finite = lambda_hat_q(level).finite
    rep._record("finite part is lambda_q", finite == lambda_q(ct, q).weight,
                f"{finite} != {lambda_q(ct, q).weight}")
    rep._record("level", lambda_hat_q(level).k == level.k, f"{lambda_hat_q(level).k} != {level.k}")

    # finite parts of the pairings, computed once per finite root
    two_over = {a: 2 / rs.norm2(a) for a in rs.roots}
    lam_fin = {a: rs.form(lam.finite, a) for a in rs.roots}
    base_fin = {a: rs.form(base.finite, a) for a in rs.roots}

    def pair_lam(a, n):
        return two_over[a] * (lam_fin[a] + n * lam.k)

    def pair_base(a, n):
        return two_over[a] * (base_fin[a] + n * base.k)

    for r in window_roots(rs, N):
        a, n = r.finite_root, r.n
        v = pair_lam(a, n)
        if r.is_positive(rs):
            rep._record("regular dominant", v > 0, f"<lambda+rho, {r}^vee> = {v}")
        b = pair_base(a, n)
        rep._record("k Lambda_0 closed form", _integral(b) == expected_in_k_lambda0(rs, q, r),
                    f"{r}: pairing {b}")

    for c, d in rep.bezout:
        mu = mu_for(level, c)
        ok = in_coweight_lattice(rs, mu)
        rep._record("mu in coweight lattice", ok, f"c={c}")
        if not ok:
            continue
        shift = {a: int(rs.form(mu, a)) for a in rs.roots}
        for r in window_roots(rs, N):
            a, n = r.finite_root, r.n
            inside = _integral(pair_lam(a, n))
            # r lies in t_{-mu}(D) iff t_mu(r) = a + (n - (mu|a)) delta lies in D
            in_image = _integral(pair_base(a, n - shift[a]))
            rep._record(f"equal sets (c={c})", inside == in_image,
                        f"{r}: in Delta(lambda)={inside}, in t_-mu(Delta(k Lambda_0))={in_image}")
            if _integral(pair_base(a, n)):
                rep._record(f"image integral (c={c})", _integral(pair_lam(a, n + shift[a])),
                            f"t_-mu({r}) = {a} + {n + shift[a]} delta")
        # spot check the closed pairing formula against translate() itself
        for a in rs.roots[:4]:
            img = translate(rs, tuple(-x for x in mu), AffineRealRoot(a, 1))
            rep._record(f"translate formula (c={c})", img.n == 1 + shift[a], f"{a}")
    return rep
