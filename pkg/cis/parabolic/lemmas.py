"""Root-combinatorial facts about a built case, reported as name -> bool."""

from ..utils.types import Root
from .cores import ParabolicCase, classify_step, nilpotency_bruteforce

__all__ = ["verify_weight_lemmas", "structural_checks", "lowering_orbit"]


def _add(a: Root, b: Root, sign: int = 1) -> Root:
    return tuple(x + sign * y for x, y in zip(a, b))


def verify_weight_lemmas(case: ParabolicCase) -> dict[str, bool]:
    rs = case.root_system
    is_root = rs.is_root
    gamma, mu, xg, aq = case.gamma, case.mu, case.xi_gamma, case.alpha_q
    g_mu = _add(gamma, mu, -1)

    report = {
        "xi_gamma + alpha_q is a root": is_root(_add(xg, aq)),
        "gamma - xi_gamma is a root": is_root(_add(gamma, xg, -1)),
        "gamma - mu is a root": is_root(g_mu),
        "mu - xi_gamma is a root": is_root(_add(mu, xg, -1)),
        "||mu||^2 = ||alpha_q||^2": rs.norm(mu) == case.alpha_q_norm,
        "lambda_q(H_beta) = ||alpha_q||^2/2 on g(1)": all(
            rs.inner(case.lambda_q, b) == case.alpha_q_norm / 2 for b in case.delta_g1
        ),
    }
    if rs.is_long(xg):
        report["gamma - mu + xi_gamma is not a root"] = not is_root(_add(g_mu, xg))
        report["gamma - mu - xi_gamma is not a root"] = not is_root(_add(g_mu, xg, -1))
    else:
        # short xi_gamma only occurs for C_n(i)
        report["gamma - mu - xi_gamma is a root"] = is_root(_add(g_mu, xg, -1))
        report["gamma - mu + xi_gamma is not a root"] = not is_root(_add(g_mu, xg))

    xn = case.xi_ngamma
    if xn is not None:
        report.update(
            {
                "xi_ngamma + alpha_q is a root": is_root(_add(xn, aq)),
                "gamma - xi_ngamma is not a root": not is_root(_add(gamma, xn, -1)),
                "mu - xi_ngamma is a root": is_root(_add(mu, xn, -1)),
                "gamma - mu + xi_ngamma is a root": is_root(_add(g_mu, xn)),
                "gamma - mu - xi_ngamma is not a root": not is_root(_add(g_mu, xn, -1)),
            }
        )
    return report


def lowering_orbit(case: ParabolicCase, start: Root, simples) -> set[Root]:
    """Roots reached from X_start by repeated ad X_(-alpha_j), j in ``simples``."""
    rs = case.root_system
    model = case.model
    seen = {start}
    stack = [start]
    while stack:
        r = stack.pop()
        for j in simples:
            neg = tuple(-c for c in rs.simple_root(j))
            if model.n(neg, r):
                nxt = _add(r, neg)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def structural_checks(case: ParabolicCase, *, bracket_grading: bool = True) -> dict[str, bool]:
    rs = case.root_system
    model = case.model
    report: dict[str, bool] = {}

    hq_ok = True
    for r in rs.roots:
        got = case.h_q.bracket(model.x(r)).coefficient(r)
        if got != case.grade(r) or abs(case.grade(r)) > 2:
            hq_ok = False
            break
    report["H_q acts by the grade on every root vector"] = hq_ok

    if bracket_grading:
        ok = True
        for la in model.basis_labels:
            for lb in model.basis_labels:
                expected = case.label_grade(la) + case.label_grade(lb)
                if any(case.label_grade(lc) != expected for lc in model.bracket_basis(la, lb)):
                    ok = False
                    break
            if not ok:
                break
        report["[g(i), g(j)] lies in g(i+j)"] = ok

    step, dim_nn = nilpotency_bruteforce(case.spec)
    cls = classify_step(case.spec)
    report["lower central series agrees with the multiplicity formula"] = (step, dim_nn) == (cls.k, cls.dim_nn)

    report["g(1) is generated from X_mu by lowering"] = lowering_orbit(case, case.mu, case.levi_simples) == case.g1_set
    report["z(n) is generated from X_gamma by l_gamma"] = lowering_orbit(case, case.gamma, case.lgamma_simples) == case.zn_set

    kills = True
    for j in case.lngamma_simples:
        a = rs.simple_root(j)
        if rs.inner(a, case.gamma) != 0 or model.n(a, case.gamma) or model.n(tuple(-c for c in a), case.gamma):
            kills = False
    report["l_ngamma annihilates X_gamma"] = kills

    report["alpha_gamma is the only simple root not orthogonal to gamma"] = [
        j for j in range(1, rs.rank + 1) if rs.inner(rs.simple_root(j), case.gamma) != 0
    ] == [case.alpha_gamma_index]

    report["mu is Levi-dominant"] = all(rs.coroot_pairing(case.mu, j - 1) >= 0 for j in case.levi_simples)
    return report
