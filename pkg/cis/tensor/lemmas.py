"""Root-set and structure-constant identities around a special constituent."""

from ..parabolic.cores import ParabolicCase
from ..utils.types import ConstituentType, Root
from .cores import SpecialConstituent, c_summands, delta_nu

__all__ = ["constituent_lemmas"]


def _add(a: Root, b: Root, sign: int = 1) -> Root:
    return tuple(x + sign * y for x, y in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-c for c in a)


def constituent_lemmas(case: ParabolicCase, sc: SpecialConstituent) -> dict[str, bool]:
    rs = case.root_system
    n = case.model.n
    is_root = rs.is_root
    mu, eps, nu = case.mu, sc.epsilon, sc.nu
    g1 = delta_nu(case, nu, case.delta_g1)
    zn = delta_nu(case, nu, case.delta_zn)

    def theta(b: Root) -> Root:
        return _add(nu, b, -1)

    report: dict[str, bool] = {"Delta_nu(z(n)) is nonempty": bool(zn)}

    if sc.kind is ConstituentType.TYPE_3:
        report["mu + eps is a root"] = is_root(_add(mu, eps))
        return report

    report["delta - mu and delta - eps are roots off {mu, eps}"] = all(
        is_root(_add(d, mu, -1)) and is_root(_add(d, eps, -1)) for d in g1 + zn if d not in (mu, eps)
    )
    report["mu +- eps are not roots"] = not is_root(_add(mu, eps)) and not is_root(_add(mu, eps, -1))

    if sc.kind is ConstituentType.TYPE_1B:
        return report

    report["Delta_nu(g(1)) lies in Delta_gamma_t(g(1))"] = all(set(g1) <= set(delta_nu(case, gt, case.delta_g1)) for gt in zn)
    report["Delta_theta(gamma_t)(g(1)) is nonempty"] = all(delta_nu(case, theta(gt), case.delta_g1) for gt in zn)
    summands = c_summands(case, sc, zn)
    report["C(mu, eps) summands are positive"] = bool(summands) and all(s.sign() > 0 for s in summands)

    exchange = True
    for a in g1:
        for b in g1:
            if is_root(_add(a, b)):
                continue
            for d in zn:
                if _add(a, b) == d:
                    continue
                lhs = n(b, _add(a, d, -1)) * n(a, _neg(d))
                rhs = n(a, _add(b, d, -1)) * n(b, _neg(d))
                if lhs != rhs:
                    exchange = False
    report["N_(b,a-d) N_(a,-d) = N_(a,b-d) N_(b,-d)"] = exchange

    if sc.kind is ConstituentType.TYPE_2:
        report["Delta_2mu(g(1)) = {mu}"] = g1 == (mu,)
        return report

    report["<mu, eps> = 0"] = rs.inner(mu, eps) == 0
    report["Delta_nu(g(1)) has roots other than mu, eps"] = any(a not in (mu, eps) for a in g1)
    report["gamma_t - alpha is a root"] = all(is_root(_add(gt, a, -1)) for a in g1 for gt in zn)

    half = case.alpha_q_norm / 2
    product_identity = True
    for a in g1:
        if a in (mu, eps):
            continue
        for gt in zn:
            lhs = n(a, _neg(gt)) * n(mu, _neg(a)) * n(_neg(theta(gt)), theta(a)) * n(_neg(theta(a)), theta(mu))
            rhs = n(mu, _add(eps, gt, -1)) * n(eps, _neg(gt)) * half
            if lhs != rhs:
                product_identity = False
    report["four-constant product identity"] = product_identity
    return report
