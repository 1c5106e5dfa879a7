import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincquad.auto_tol import ToleranceRequest, choose_n, integrate_to_tol
from sincquad.exceptions import DomainError, ToleranceUnreachableError
from sincquad.mesh import DecayParams, SchemeId, scheme_for
from sincquad.problems import get_problem
from sincquad.transforms import IntervalCase, TransformId, case_of

PAIRS = [(ex, fam) for ex in (1, 2, 3) for fam in ("se", "de")]


def request(ex, family, tol, kind="quad", n_cap=10**6):
    tid, p = get_problem(ex).setup(family)
    return ToleranceRequest(tol=tol, scheme=scheme_for(tid, kind), tid=tid, params=p, n_cap=n_cap)


def scan(req, n_max):
    cert = req.certificate()
    for n in range(1, n_max + 1):
        if cert.is_valid(n) and cert.bound(n) <= req.tol:
            return n
    return None


class TestRequest:
    @pytest.mark.parametrize("tol", [0.0, -1e-3, math.inf, math.nan])
    def test_rejects_tol(self, tol):
        with pytest.raises(DomainError):
            request(2, "de", tol)

    @pytest.mark.parametrize("cap", [0, 2.5])
    def test_rejects_cap(self, cap):
        with pytest.raises(DomainError):
            request(2, "de", 1e-3, n_cap=cap)

    def test_coerces_ids(self):
        tid, p = get_problem(2).setup("se")
        req = ToleranceRequest(tol=1e-3, scheme="se_quad", tid="se2", params=p)
        assert req.scheme is SchemeId.SE_QUAD and req.tid is TransformId.SE2


class TestChooseN:
    def test_loose_tol_gives_first_valid(self):
        req = request(3, "de", 1e6, kind="indef")
        n, bound = choose_n(req)
        assert n == 2  # n = 1 fails the size condition
        assert bound == req.certificate().bound(2)

    def test_example2_de_minimal(self):
        req = request(2, "de", 1e-10)
        n, bound = choose_n(req)
        assert n == scan(req, 200)
        cert = req.certificate()
        assert bound <= 1e-10
        assert not (cert.is_valid(n - 1) and cert.bound(n - 1) <= 1e-10)

    def test_unreachable(self):
        with pytest.raises(ToleranceUnreachableError):
            choose_n(request(1, "se", 1e-300, n_cap=100))

    def test_reaches_cap_exactly(self):
        req = request(1, "se", 1e-3)
        n, _ = choose_n(req)
        n2, _ = choose_n(request(1, "se", 1e-3, n_cap=n))
        assert n2 == n

    @pytest.mark.parametrize("ex,family", PAIRS)
    @pytest.mark.parametrize("kind", ["quad", "indef"])
    def test_monotone_in_tol(self, ex, family, kind):
        ns = [choose_n(request(ex, family, 10.0**-k, kind=kind))[0] for k in range(1, 15)]
        assert ns == sorted(ns)

    @settings(max_examples=20, deadline=None)
    @given(
        tid=st.sampled_from([TransformId.SE1, TransformId.SE2, TransformId.SE3, TransformId.DE1, TransformId.DE2, TransformId.DE3_DDAGGER]),
        kind=st.sampled_from(["quad", "indef"]),
        alpha=st.floats(0.2, 1.0),
        beta=st.floats(0.2, 3.0),
        d=st.floats(0.1, 1.5),
        K=st.floats(0.1, 10.0),
        log_tol=st.floats(-12, -1),
    )
    def test_matches_exhaustive_scan(self, tid, kind, alpha, beta, d, K, log_tol):
        p = DecayParams(K=K, alpha=alpha, beta=beta, d=d, case=case_of(tid))
        req = ToleranceRequest(tol=10.0**log_tol, scheme=scheme_for(tid, kind), tid=tid, params=p, n_cap=3000)
        expected = scan(req, 3000)
        if expected is None:
            with pytest.raises(ToleranceUnreachableError):
                choose_n(req)
        else:
            assert choose_n(req)[0] == expected


class TestIntegrateToTol:
    def test_example1_de(self):
        res = integrate_to_tol(get_problem(1).f, request(1, "de", 1e-8))
        assert abs(res.value - 1.0) <= 1e-8
        assert res.bound <= 1e-8

    def test_example3_de(self):
        prob = get_problem(3)
        res = integrate_to_tol(prob.f, request(3, "de", 1e-6))
        assert abs(res.value - prob.exact) <= 1e-6

    def test_bound_is_certified_bound(self):
        req = request(2, "se", 1e-7)
        n, bound = choose_n(req)
        res = integrate_to_tol(get_problem(2).f, req)
        assert res.mesh.n == n and res.bound == bound

    def test_deterministic(self):
        req = request(3, "se", 1e-6)
        a = integrate_to_tol(get_problem(3).f, req)
        b = integrate_to_tol(get_problem(3).f, req)
        assert a.value == b.value and a.bound == b.bound

    def test_indefinite(self):
        prob = get_problem(2)
        req = request(2, "de", 1e-9, kind="indef")
        taus = np.array([0.0, 0.5, 3.0, 1e4])
        res = integrate_to_tol(prob.f, req, tau=taus)
        exact = np.array([prob.exact_indef(t) for t in taus])
        assert np.max(np.abs(res.value - exact)) <= 1e-9

    def test_indefinite_needs_tau(self):
        with pytest.raises(DomainError):
            integrate_to_tol(get_problem(2).f, request(2, "de", 1e-3, kind="indef"))
