"""Central extensions, semidirect products, and double extensions.

Orientation convention used throughout the constructive direction: the new
hyperbolic pair (e, e*) is paired as B~(e, e*) = +1.  In the odd case the
bracket table is then

    ee  = A0
    eX  = D(X) + (-1)^x B(X, A0) e*
    XY  = (XY)_M + B(D(X), Y) e*
    e* . everything = 0

which is the unique orientation for which B~ stays invariant (flipping the
sign of e* gives the equivalent table with minus signs and B~(e*, e) = +1).
The even case uses eX = D(X), XY = (XY)_M + B(D(X), Y) e*, ee = 0 with a
symmetric hyperbolic (e, e*) block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (EVEN, ODD, CheckReport, Element, SuperAlgebra, SuperSpace,
                   Witness, _from_element, _mul_vb, _mul_vv, _report,
                   _to_element, _vadd, _vscale, ksign)
from .errors import AxiomError, InputError, PreconditionError
from .linalg import ONE, ZERO, frac
from .operators import (OperatorMap, check_malcev_operator,
                        check_skew_supersymmetric)
from .quadratic import (BilinearForm, QuadraticAlgebra, _require_validated)

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GdeData:
    """Data for an odd-line double extension: odd operator d and even a0."""

    d: OperatorMap
    a0: Element
    verified: bool = False


@dataclass(frozen=True)
class ExtensionWitness:
    """Where the new vectors landed and how the input basis embeds."""

    e_index: int
    estar_index: int
    embedding: tuple


@dataclass(frozen=True)
class GdeReport:
    """Itemized admissibility report for odd double-extension data."""

    skew: CheckReport
    operator: CheckReport
    square: CheckReport          # d^2(a0) = (1/2) a0 a0
    compat_action: CheckReport   # d(a0 X) = a0 d(X) - d(a0) X
    compat_outer: CheckReport    # (a0 X)Y expansion in d
    compat_inner: CheckReport    # a0 (XY) expansion in d

    @property
    def passed(self):
        return all(getattr(self, f).passed for f in self._fields())

    @staticmethod
    def _fields():
        return ("skew", "operator", "square", "compat_action",
                "compat_outer", "compat_inner")

    def first_failure(self):
        for f in self._fields():
            if not getattr(self, f).passed:
                return f
        return None


def _gram_pairing(q: QuadraticAlgebra, f: OperatorMap):
    """Matrix of B(f(b_i), b_j)."""
    fm = [list(r) for r in f.matrix]
    return linalg.mat_mul(linalg.transpose(fm), q.form.matrix())


def verify_gde_data(q: QuadraticAlgebra, g: GdeData) -> GdeReport:
    """Check, in order: skewness, the operator identity, the square rule,
    and the three compatibility equations between d and a0."""
    _require_validated(q)
    a = q.algebra
    n = a.dim
    if g.d.dim != n or len(g.a0) != n:
        raise InputError("extension data does not match the algebra")
    if g.d.parity != ODD:
        raise InputError("extension operator must be odd")
    if g.a0.homogeneous_parity(a.space) not in (None, EVEN):
        raise InputError("a0 must be even homogeneous")
    g.d.validate_parity(a.space)

    skew = check_skew_supersymmetric(q.form, g.d, a.space)
    oper = check_malcev_operator(a, g.d)

    par = [a.space.parity(i) for i in range(n)]
    a0 = _from_element(g.a0)
    d = g.d
    da0 = d.apply_vec(a0)
    d2a0 = d.apply_vec(da0)
    half_sq = _vscale(_mul_vv(a, a0, a0), _HALF)
    sq_wit = []
    if d2a0 != half_sq:
        sq_wit.append(Witness(("a0",), _to_element(n, d2a0),
                              _to_element(n, half_sq)))

    act_wit = []
    for i in range(n):
        lhs = d.apply_vec(_mul_vb(a, a0, i))
        rhs = _mul_vv(a, a0, d.column(i))
        _vadd(rhs, _mul_vb(a, da0, i), frac(-1))
        if lhs != rhs:
            act_wit.append(Witness((i,), _to_element(n, lhs),
                                   _to_element(n, rhs)))

    outer_wit = []
    inner_wit = []
    for i in range(n):
        di = d.column(i)
        d2i = d.apply_vec(di)
        for j in range(n):
            dj = d.column(j)
            d2j = d.apply_vec(dj)
            x, y = par[i], par[j]
            # (a0 b_i) b_j = d(d(b_i) b_j) + d^2(b_i b_j)
            #              + (-1)^x d(b_i) d(b_j) + (-1)^{xy} d^2(b_j) b_i
            lhs = _mul_vb(a, _mul_vb(a, a0, i), j)
            rhs = d.apply_vec(_mul_vb(a, di, j))
            _vadd(rhs, d.apply_vec(d.apply_vec(a.basis_product(i, j))))
            _vadd(rhs, _mul_vv(a, di, dj), frac(ksign(x)))
            _vadd(rhs, _mul_vb(a, d2j, i), frac(ksign(x * y)))
            if lhs != rhs:
                outer_wit.append(Witness((i, j), _to_element(n, lhs),
                                         _to_element(n, rhs)))
            # a0 (b_i b_j) = d(d(b_i) b_j) + d^2(b_i) b_j
            #              - (-1)^{xy} { d^2(b_j) b_i + d(d(b_j) b_i) }
            lhs2 = _mul_vv(a, a0, a.basis_product(i, j))
            rhs2 = d.apply_vec(_mul_vb(a, di, j))
            _vadd(rhs2, _mul_vb(a, d2i, j))
            _vadd(rhs2, _mul_vb(a, d2j, i), frac(-ksign(x * y)))
            _vadd(rhs2, d.apply_vec(_mul_vb(a, dj, i)), frac(-ksign(x * y)))
            if lhs2 != rhs2:
                inner_wit.append(Witness((i, j), _to_element(n, lhs2),
                                         _to_element(n, rhs2)))

    return GdeReport(skew=skew, operator=oper, square=_report(sq_wit),
                     compat_action=_report(act_wit),
                     compat_outer=_report(outer_wit),
                     compat_inner=_report(inner_wit))


def verified_gde_data(q: QuadraticAlgebra, d: OperatorMap,
                      a0: Element) -> GdeData:
    g = GdeData(d, a0, verified=False)
    report = verify_gde_data(q, g)
    if not report.passed:
        raise PreconditionError("extension data rejected: %s fails"
                                % report.first_failure())
    return GdeData(d, a0, verified=True)


def central_extension(q: QuadraticAlgebra, d: OperatorMap) -> SuperAlgebra:
    """Adjoin an annihilating odd line with the twist (X,Y) -> -B(d(X),Y).

    Requires d to be an odd skew-supersymmetric operator satisfying the
    operator identity; the extension then satisfies the Malcev identity.
    """
    _require_validated(q)
    if d.parity != ODD:
        raise PreconditionError("central extension twist must be odd")
    d.validate_parity(q.space)
    skew = check_skew_supersymmetric(q.form, d, q.space)
    if not skew.passed:
        raise PreconditionError("twist operator is not skew-supersymmetric")
    oper = check_malcev_operator(q.algebra, d)
    if not oper.passed:
        raise PreconditionError("twist operator fails the operator identity")
    n = q.dim
    space = SuperSpace(q.space.even_dim, q.space.odd_dim + 1)
    estar = n
    constants = dict(q.algebra.constants)
    pairing = _gram_pairing(q, d)
    for i in range(n):
        for j in range(n):
            w = -pairing[i][j]
            if w != 0:
                constants[(i, j, estar)] = w
    out = SuperAlgebra(space, constants,
                       name="central_ext(%s)" % q.name)
    from .core import check_malcev

    rep = check_malcev(out)
    if not rep.passed:
        raise AxiomError("central extension failed the Malcev identity", rep)
    return out


def generalized_double_extension(q: QuadraticAlgebra, g: GdeData):
    """Odd-line double extension of a quadratic algebra by verified data.

    Output basis order: evens of the input, then e, then odds of the input,
    then e*; the returned witness records the placement.  The result is
    fully validated (Malcev identity and all four form axioms).
    """
    _require_validated(q)
    if not g.verified:
        report = verify_gde_data(q, g)
        if not report.passed:
            raise PreconditionError("unverified extension data: %s fails"
                                    % report.first_failure())
        g = GdeData(g.d, g.a0, verified=True)
    p, q0 = q.space.even_dim, q.space.odd_dim
    n = p + q0
    emap = [i if i < p else i + 1 for i in range(n)]
    e_idx, estar = p, n + 1
    constants = {}
    for (i, j, k), c in q.algebra.constants.items():
        constants[(emap[i], emap[j], emap[k])] = c
    pairing = _gram_pairing(q, g.d)
    for i in range(n):
        for j in range(n):
            w = pairing[i][j]
            if w != 0:
                constants[(emap[i], emap[j], estar)] = w
    for k, c in enumerate(g.a0.coords):
        if c != 0:
            constants[(e_idx, e_idx, emap[k])] = c
    ga0 = linalg.mat_vec(q.form.matrix(), list(g.a0.coords))
    par = [q.space.parity(i) for i in range(n)]
    for j in range(n):
        entries = {}
        for r, v in g.d.column(j).items():
            entries[emap[r]] = v
        s = ksign(par[j]) * ga0[j]
        if s != 0:
            entries[estar] = s
        back = frac(-ksign(par[j]))
        for r, v in entries.items():
            constants[(e_idx, emap[j], r)] = v
            constants[(emap[j], e_idx, r)] = back * v
    gram = {}
    for i in range(n):
        for j in range(n):
            v = q.form.gram[i][j]
            if v != 0:
                gram[(emap[i], emap[j])] = v
    gram[(e_idx, estar)] = ONE
    gram[(estar, e_idx)] = -ONE
    space = SuperSpace(p, q0 + 2)
    alg = SuperAlgebra(space, constants, name="gde(%s)" % q.name)
    form = BilinearForm.from_entries(space.dim, gram)
    out = QuadraticAlgebra.validate(alg, form)
    return out, ExtensionWitness(e_idx, estar, tuple(emap))


def double_extension_even(q: QuadraticAlgebra, d: OperatorMap):
    """Even-line double extension; validation is the admissibility gate.

    Output basis order: e first, then evens of the input, then e*, then the
    odds of the input.  eX = d(X), XY = (XY)_M + B(d(X),Y) e*, ee = 0, and
    the form is extended hyperbolically on (e, e*).
    """
    _require_validated(q)
    if d.parity != EVEN:
        raise PreconditionError("even double extension needs an even operator")
    d.validate_parity(q.space)
    if not check_skew_supersymmetric(q.form, d, q.space).passed:
        raise PreconditionError("operator is not skew-supersymmetric")
    if not check_malcev_operator(q.algebra, d).passed:
        raise PreconditionError("operator fails the operator identity")
    p, q0 = q.space.even_dim, q.space.odd_dim
    n = p + q0
    emap = [i + 1 if i < p else i + 2 for i in range(n)]
    e_idx, estar = 0, p + 1
    constants = {}
    for (i, j, k), c in q.algebra.constants.items():
        constants[(emap[i], emap[j], emap[k])] = c
    pairing = _gram_pairing(q, d)
    for i in range(n):
        for j in range(n):
            w = pairing[i][j]
            if w != 0:
                constants[(emap[i], emap[j], estar)] = w
    for j in range(n):
        for r, v in d.column(j).items():
            constants[(e_idx, emap[j], emap[r])] = v
            constants[(emap[j], e_idx, emap[r])] = -v
    gram = {}
    for i in range(n):
        for j in range(n):
            v = q.form.gram[i][j]
            if v != 0:
                gram[(emap[i], emap[j])] = v
    gram[(e_idx, estar)] = ONE
    gram[(estar, e_idx)] = ONE
    space = SuperSpace(p + 2, q0)
    alg = SuperAlgebra(space, constants, name="de(%s)" % q.name)
    form = BilinearForm.from_entries(space.dim, gram)
    out = QuadraticAlgebra.validate(alg, form)
    return out, ExtensionWitness(e_idx, estar, tuple(emap))


# ---------------------------------------------------------------------------
# generalized semidirect products


class SemidirectData:
    """Operators omega (one per basis vector of the acting algebra) and an
    even graded-skew bilinear twist zeta with values in the acted algebra."""

    def __init__(self, m: SuperAlgebra, v: SuperAlgebra, omega, zeta):
        self.m = m
        self.v = v
        self.omega = tuple(omega)
        self.zeta = tuple(tuple(row) for row in zeta)
        if len(self.omega) != m.dim:
            raise InputError("need one operator per basis vector")
        for i, op in enumerate(self.omega):
            if op.dim != v.dim:
                raise InputError("operator %d has wrong dimension" % i)
            if op.parity != m.space.parity(i):
                raise InputError("operator %d parity must match its basis "
                                 "vector" % i)
            op.validate_parity(v.space)
        if len(self.zeta) != m.dim:
            raise InputError("twist must be (dim m) x (dim m)")
        for i, row in enumerate(self.zeta):
            if len(row) != m.dim:
                raise InputError("twist must be square")
            for j, el in enumerate(row):
                if len(el) != v.dim:
                    raise InputError("twist values must live in the acted "
                                     "algebra")
                want = (m.space.parity(i) + m.space.parity(j)) % 2
                got = el.homogeneous_parity(v.space)
                if got is not None and got != want:
                    raise InputError("twist is not even as a bilinear map")
        for i in range(m.dim):
            for j in range(m.dim):
                s = -ksign(m.space.parity(i) * m.space.parity(j))
                lhs = self.zeta[j][i]
                rhs = self.zeta[i][j].scale(s)
                if lhs != rhs:
                    raise InputError("twist is not graded skew-symmetric")

    def omega_apply(self, xvec, vvec):
        """Apply omega(X) to a vector of V, X given as a sparse M vector."""
        out = {}
        for i, ci in xvec.items():
            op = self.omega[i]
            for j, cj in vvec.items():
                _vadd(out, op.column(j), ci * cj)
        return out

    def zeta_apply(self, xvec, yvec):
        out = {}
        for i, ci in xvec.items():
            row = self.zeta[i]
            for j, cj in yvec.items():
                _vadd(out, _from_element(row[j]), ci * cj)
        return out


@dataclass(frozen=True)
class GsdReport:
    """Per-condition verdicts for the semidirect compatibility system."""

    operators: CheckReport
    cond1: CheckReport
    cond2: CheckReport
    cond3: CheckReport
    cond4: CheckReport
    cond5: CheckReport

    @staticmethod
    def _fields():
        return ("operators", "cond1", "cond2", "cond3", "cond4", "cond5")

    @property
    def passed(self):
        return all(getattr(self, f).passed for f in self._fields())

    def first_failure(self):
        for f in self._fields():
            if not getattr(self, f).passed:
                return f
        return None


def check_gsd_conditions(m: SuperAlgebra, v: SuperAlgebra,
                         s: SemidirectData) -> GsdReport:
    """Evaluate the five compatibility conditions on all basis tuples."""
    if s.m is not m or s.v is not v:
        # allow equal-but-distinct objects
        if s.m != m or s.v != v:
            raise InputError("semidirect data belongs to other algebras")
    nm, nv = m.dim, v.dim
    pm = [m.space.parity(i) for i in range(nm)]
    pv = [v.space.parity(i) for i in range(nv)]

    def mb(i):
        return {i: ONE}

    op_wit = []
    for i in range(nm):
        rep = check_malcev_operator(v, s.omega[i])
        if not rep.passed:
            op_wit.append(Witness((i,), "operator identity fails",
                                  rep.witnesses[0].index))

    w1 = []
    for i in range(nm):
        for j in range(nm):
            zeij = s.zeta_apply(mb(i), mb(j))
            mij = m.basis_product(i, j)
            for h in range(nv):
                for t_ in range(nv):
                    x, y = pm[i], pm[j]
                    z, t = pv[h], pv[t_]
                    acc = _mul_vb(v, s.omega_apply(mij, {h: ONE}), t_)
                    _vadd(acc, s.omega_apply(
                        mb(i), _mul_vb(v, s.omega[j].column(h), t_)),
                        frac(-1))
                    _vadd(acc, _mul_vv(v, s.omega[i].column(h),
                                       s.omega[j].column(t_)),
                          frac(-ksign(y * z)))
                    _vadd(acc, s.omega_apply(
                        mb(j), s.omega_apply(mb(i), v.basis_product(h, t_))),
                        frac(ksign(x * y)))
                    _vadd(acc, _mul_vb(v, s.omega_apply(
                        mb(j), s.omega[i].column(t_)), h),
                        frac(ksign(t * z + x * y)))
                    _vadd(acc, _mul_vb(v, _mul_vb(v, zeij, h), t_))
                    if acc:
                        w1.append(Witness((i, j, h, t_),
                                          _to_element(nv, acc),
                                          Element.zero(nv)))

    w2 = []
    for i in range(nm):
        for k in range(nm):
            zeik = s.zeta_apply(mb(i), mb(k))
            mik = m.basis_product(i, k)
            for g in range(nv):
                for t_ in range(nv):
                    x, z = pm[i], pm[k]
                    y, t = pv[g], pv[t_]
                    ghi = v.basis_product(g, t_)
                    acc = _vscale(_mul_vv(v, zeik, ghi), frac(ksign(y * z)))
                    _vadd(acc, s.omega_apply(mik, ghi), frac(ksign(y * z)))
                    _vadd(acc, _mul_vb(v, s.omega_apply(
                        mb(k), s.omega[i].column(g)), t_),
                        frac(ksign(z * (x + y))))
                    _vadd(acc, s.omega_apply(
                        mb(i), _mul_vb(v, s.omega[k].column(g), t_)),
                        frac(-ksign(y * z)))
                    _vadd(acc, _mul_vb(v, s.omega_apply(
                        mb(i), s.omega[k].column(t_)), g),
                        frac(ksign(y * (z + t))))
                    _vadd(acc, s.omega_apply(
                        mb(k), _mul_vb(v, s.omega[i].column(t_), g)),
                        frac(-ksign(t * y + (x + y) * z)))
                    if acc:
                        w2.append(Witness((i, k, g, t_),
                                          _to_element(nv, acc),
                                          Element.zero(nv)))

    w3 = []
    for i in range(nm):
        for j in range(nm):
            zeij = s.zeta_apply(mb(i), mb(j))
            for l in range(nm):
                zejl = s.zeta_apply(mb(j), mb(l))
                zeli = s.zeta_apply(mb(l), mb(i))
                for h in range(nv):
                    x, y, t = pm[i], pm[j], pm[l]
                    z = pv[h]
                    acc = _vscale(_mul_vv(v, s.omega[i].column(h), zejl),
                                  frac(ksign(y * z)))
                    _vadd(acc, s.omega_apply(mb(l), _mul_vb(v, zeij, h)),
                          frac(ksign(t * (x + y + z))))
                    _vadd(acc, _mul_vb(v, s.omega_apply(mb(j), zeli), h),
                          frac(ksign(t * (x + z) + x * y)))
                    if acc:
                        w3.append(Witness((i, j, l, h),
                                          _to_element(nv, acc),
                                          Element.zero(nv)))

    w4 = []
    for i in range(nm):
        for j in range(nm):
            for k in range(nm):
                for l in range(nm):
                    x, y, z, t = pm[i], pm[j], pm[k], pm[l]
                    acc = _vscale(
                        s.omega_apply(m.basis_product(i, k),
                                      s.zeta_apply(mb(j), mb(l))),
                        frac(-ksign(y * z)))
                    _vadd(acc, s.omega_apply(mb(i), s.omega_apply(
                        mb(l), s.zeta_apply(mb(j), mb(k)))),
                        frac(ksign(t * (y + z))))
                    _vadd(acc, s.omega_apply(mb(k), s.omega_apply(
                        mb(j), s.zeta_apply(mb(l), mb(i)))),
                        frac(ksign(x * (y + z + t) + y * z)))
                    _vadd(acc, s.omega_apply(
                        mb(i), s.zeta_apply(m.basis_product(j, k), mb(l))),
                        frac(-1))
                    _vadd(acc, s.omega_apply(
                        mb(k), s.zeta_apply(m.basis_product(l, i), mb(j))),
                        frac(-ksign((x + y) * (z + t))))
                    # minus the right-hand side
                    _vadd(acc, s.zeta_apply(m.basis_product(i, k),
                                            m.basis_product(j, l)),
                          frac(ksign(y * z)))
                    _vadd(acc, _mul_vv(v, s.zeta_apply(mb(i), mb(k)),
                                       s.zeta_apply(mb(j), mb(l))),
                          frac(ksign(y * z)))
                    _vadd(acc, s.zeta_apply(
                        _mul_vb(m, m.basis_product(i, j), k), mb(l)),
                        frac(-1))
                    _vadd(acc, s.zeta_apply(
                        _mul_vb(m, m.basis_product(j, k), l), mb(i)),
                        frac(-ksign(x * (y + z + t))))
                    _vadd(acc, s.zeta_apply(
                        _mul_vb(m, m.basis_product(k, l), i), mb(j)),
                        frac(-ksign((x + y) * (z + t))))
                    _vadd(acc, s.zeta_apply(
                        _mul_vb(m, m.basis_product(l, i), j), mb(k)),
                        frac(-ksign(t * (x + y + z))))
                    if acc:
                        w4.append(Witness((i, j, k, l),
                                          _to_element(nv, acc),
                                          Element.zero(nv)))

    w5 = []
    for i in range(nm):
        for j in range(nm):
            mij = m.basis_product(i, j)
            for k in range(nm):
                mik = m.basis_product(i, k)
                mjk = m.basis_product(j, k)
                for t_ in range(nv):
                    x, y, z = pm[i], pm[j], pm[k]
                    acc = _vscale(
                        s.omega_apply(mik, s.omega[j].column(t_)),
                        frac(ksign(y * z)))
                    _vadd(acc, _mul_vb(v, s.zeta_apply(mij, mb(k)), t_),
                          frac(-1))
                    _vadd(acc, s.omega_apply(
                        _mul_vb(m, mij, k), {t_: ONE}), frac(-1))
                    _vadd(acc, s.omega_apply(
                        mb(i), s.omega_apply(mjk, {t_: ONE})))
                    _vadd(acc, s.omega_apply(mb(j), s.omega_apply(
                        mb(i), s.omega[k].column(t_))),
                        frac(-ksign(x * y)))
                    _vadd(acc, s.omega_apply(mb(k), s.omega_apply(
                        mb(j), s.omega[i].column(t_))),
                        frac(ksign((x + y) * z + x * y)))
                    if acc:
                        w5.append(Witness((i, j, k, t_),
                                          _to_element(nv, acc),
                                          Element.zero(nv)))

    return GsdReport(operators=_report(op_wit), cond1=_report(w1),
                     cond2=_report(w2), cond3=_report(w3),
                     cond4=_report(w4), cond5=_report(w5))


def generalized_semidirect_product(m: SuperAlgebra, v: SuperAlgebra,
                                   s: SemidirectData) -> SuperAlgebra:
    """Twisted product on the concatenated space; refuses when any
    compatibility condition fails, naming the condition."""
    report = check_gsd_conditions(m, v, s)
    if not report.passed:
        raise PreconditionError("semidirect compatibility %s fails"
                                % report.first_failure())
    from .core import direct_sum_embeddings

    space = SuperSpace(m.space.even_dim + v.space.even_dim,
                       m.space.odd_dim + v.space.odd_dim)
    amap, bmap = direct_sum_embeddings(m.space, v.space)
    constants = {}
    for (i, j, k), c in m.constants.items():
        constants[(amap[i], amap[j], amap[k])] = c
    for i in range(m.dim):
        for j in range(m.dim):
            for h, c in _from_element(s.zeta[i][j]).items():
                constants[(amap[i], amap[j], bmap[h])] = c
    for (g, h, k), c in v.constants.items():
        constants[(bmap[g], bmap[h], bmap[k])] = c
    for i in range(m.dim):
        op = s.omega[i]
        si = m.space.parity(i)
        for h in range(v.dim):
            back = frac(-ksign(si * v.space.parity(h)))
            for r, cval in op.column(h).items():
                constants[(amap[i], bmap[h], bmap[r])] = cval
                constants[(bmap[h], amap[i], bmap[r])] = back * cval
    out = SuperAlgebra(space, constants,
                       name="gsd(%s,%s)" % (m.name, v.name))
    from .core import check_malcev

    rep = check_malcev(out)
    if not rep.passed:
        raise AxiomError("semidirect product failed the Malcev identity", rep)
    return out


def semidirect_data_from_gde(q: QuadraticAlgebra, g: GdeData):
    """The acting odd line, the centrally extended module, and the data
    (omega(e), zeta(e,e)) whose semidirect product equals the odd double
    extension of q by g, entry for entry."""
    _require_validated(q)
    if not g.verified:
        raise PreconditionError("extension data must be verified")
    n = q.dim
    line = SuperAlgebra(SuperSpace(0, 1), {}, name="odd_line")
    vext = central_extension(q, g.d.negated())
    nv = n + 1
    estar = n
    dmat = [[ZERO] * nv for _ in range(nv)]
    for j in range(n):
        for r, val in g.d.column(j).items():
            dmat[r][j] = val
    ga0 = linalg.mat_vec(q.form.matrix(), list(g.a0.coords))
    for j in range(n):
        sgn = ksign(q.space.parity(j)) * ga0[j]
        if sgn != 0:
            dmat[estar][j] = sgn
    dtilde = OperatorMap(dmat, ODD)
    a0_ext = Element(tuple(list(g.a0.coords) + [ZERO]))
    data = SemidirectData(line, vext, (dtilde,), ((a0_ext,),))
    return line, vext, data
