"""Invariant scalar products and orthogonal structure.

A quadratic algebra pairs a superalgebra with an even, supersymmetric,
non-degenerate, invariant bilinear form.  Evenness kills the cross-parity
blocks; supersymmetry makes the even block symmetric and the odd block
antisymmetric.  All checks are exact scans with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .core import (EVEN, CheckReport, Element, GradedSubspace,
                   SuperAlgebra, SuperSpace, Witness, _report,
                   ideal_closure, direct_sum, direct_sum_embeddings, product,
                   simplicity, change_basis)
from .errors import AxiomError, InputError, PreconditionError
from .linalg import ZERO, frac


class BilinearForm:
    """Gram matrix of a bilinear form in the fixed basis."""

    def __init__(self, gram):
        self.gram = tuple(tuple(frac(x) for x in row) for row in gram)
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise InputError("Gram matrix must be square")

    @classmethod
    def zero(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def from_entries(cls, n, entries):
        m = [[ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            m[i][j] = frac(v)
        return cls(m)

    @property
    def dim(self):
        return len(self.gram)

    def value(self, x: Element, y: Element):
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("element length does not match form dimension")
        total = ZERO
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            row = self.gram[i]
            for j, yj in enumerate(y.coords):
                if yj != 0 and row[j] != 0:
                    total += xi * row[j] * yj
        return total

    def matrix(self):
        return [list(row) for row in self.gram]

    def restrict(self, columns):
        """Gram of the form restricted to the span of the given columns."""
        cols = [list(c) for c in columns]
        g = self.matrix()
        out = []
        for u in cols:
            gu = linalg.mat_vec(g, u)
            out.append([sum((v[i] * gu[i] for i in range(len(gu))), ZERO)
                        for v in cols])
        # rows index the first argument: out[a][b] = B(col_a, col_b)
        return [[out[b][a] for b in range(len(cols))]
                for a in range(len(cols))]

    def is_nondegenerate(self):
        return linalg.det(self.matrix()) != 0

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.gram == other.gram

    def __repr__(self):
        return "BilinearForm(dim=%d)" % self.dim


@dataclass(frozen=True)
class FormReport:
    even: CheckReport
    supersymmetric: CheckReport
    nondegenerate: CheckReport
    invariant: CheckReport

    @property
    def passed(self):
        return (self.even.passed and self.supersymmetric.passed
                and self.nondegenerate.passed and self.invariant.passed)

    def failures(self):
        names = ("even", "supersymmetric", "nondegenerate", "invariant")
        return [nm for nm in names if not getattr(self, nm).passed]


def check_form(a: SuperAlgebra, b: BilinearForm) -> FormReport:
    """The four scalar-product axioms, each with exact witnesses."""
    n = a.dim
    if b.dim != n:
        raise InputError("form dimension does not match algebra")
    space = a.space
    par = [space.parity(i) for i in range(n)]
    g = b.gram

    even_wit = []
    for i in range(n):
        for j in range(n):
            if par[i] != par[j] and g[i][j] != 0:
                even_wit.append(Witness((i, j), g[i][j], ZERO))

    sym_wit = []
    for i in range(n):
        for j in range(i, n):
            if par[i] != par[j]:
                continue
            expected = g[j][i] if par[i] == EVEN else -g[j][i]
            if g[i][j] != expected:
                sym_wit.append(Witness((i, j), g[i][j], expected))

    nondeg_wit = []
    if linalg.det(b.matrix()) == 0:
        for v in linalg.kernel(b.matrix(), cols=n):
            nondeg_wit.append(Witness(("kernel",), Element.from_seq(v),
                                      Element.zero(n)))

    inv_wit = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = ZERO
                for m, c in a.basis_product(i, j).items():
                    lhs += c * g[m][k]
                rhs = ZERO
                for m, c in a.basis_product(j, k).items():
                    rhs += g[i][m] * c
                if lhs != rhs:
                    inv_wit.append(Witness((i, j, k), lhs, rhs))

    return FormReport(even=_report(even_wit), supersymmetric=_report(sym_wit),
                      nondegenerate=_report(nondeg_wit),
                      invariant=_report(inv_wit))


class QuadraticAlgebra:
    """A superalgebra together with an invariant scalar product."""

    def __init__(self, algebra: SuperAlgebra, form: BilinearForm,
                 validated: bool = False):
        if form.dim != algebra.dim:
            raise InputError("form dimension does not match algebra")
        self.algebra = algebra
        self.form = form
        self.validated = validated

    @classmethod
    def validate(cls, algebra: SuperAlgebra, form: BilinearForm):
        """Run the full axiom suite and return a validated instance."""
        from .core import check_malcev

        freport = check_form(algebra, form)
        if not freport.passed:
            raise AxiomError("form axioms failed: %s"
                             % ", ".join(freport.failures()), freport)
        mreport = check_malcev(algebra)
        if not mreport.passed:
            raise AxiomError("Malcev identity failed with %d witnesses"
                             % len(mreport.witnesses), mreport)
        return cls(algebra, form, validated=True)

    @property
    def space(self) -> SuperSpace:
        return self.algebra.space

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def name(self):
        return self.algebra.name

    def __eq__(self, other):
        return (isinstance(other, QuadraticAlgebra)
                and self.algebra == other.algebra
                and self.form == other.form)

    def __repr__(self):
        return "QuadraticAlgebra(%r, dim=(%d|%d))" % (
            self.name, self.space.even_dim, self.space.odd_dim)


def _require_validated(q: QuadraticAlgebra):
    if not q.validated:
        raise PreconditionError("operation requires a validated quadratic "
                                "algebra")


def orthogonal_complement(b: BilinearForm, s: GradedSubspace):
    """{v : B(c, v) = 0 for every column c of s}; exact kernel solve."""
    if not b.is_nondegenerate():
        raise PreconditionError("form is degenerate")
    n = b.dim
    gt = linalg.transpose(b.matrix())
    # B(c, v) = c^T G v, so each constraint row is G^T c
    rows = [linalg.mat_vec(gt, list(col)) for col in s.columns]
    vecs = linalg.kernel(rows, cols=n)
    return GradedSubspace.from_vectors(s.space, vecs)


def change_basis_quadratic(q: QuadraticAlgebra, basis_columns):
    """Constants and Gram matrix in the basis given as column vectors."""
    n = q.dim
    cols = [list(c) for c in basis_columns]
    cmat = [[cols[j][i] for j in range(n)] for i in range(n)]
    alg = change_basis(q.algebra, cols)
    ct = linalg.transpose(cmat)
    gram = linalg.mat_mul(ct, linalg.mat_mul(q.form.matrix(), cmat))
    return QuadraticAlgebra(alg, BilinearForm(gram), validated=q.validated)


def restrict_quadratic(q: QuadraticAlgebra, sub: GradedSubspace,
                       name: str = "", validate: bool = True):
    """Quadratic algebra on a multiplication-closed graded subspace."""
    cols = [list(c) for c in sub.columns]
    k = len(cols)
    evens = sub.even_columns()
    p = len(evens)
    cmat = [[cols[j][i] for j in range(k)] for i in range(q.dim)]
    gram_rows = [[q.form.value(Element.from_seq(cols[i]),
                               Element.from_seq(cols[j]))
                  for j in range(k)] for i in range(k)]
    # solve for products in the subspace coordinates
    constants = {}
    for i in range(k):
        xi = Element.from_seq(cols[i])
        for j in range(k):
            w = product(q.algebra, xi, Element.from_seq(cols[j]))
            coords = linalg.solve(cmat, list(w.coords))
            if coords is None:
                raise PreconditionError("subspace is not closed under the "
                                        "product")
            for m, c in enumerate(coords):
                if c != 0:
                    constants[(i, j, m)] = c
    space = SuperSpace(p, k - p)
    alg = SuperAlgebra(space, constants, name=name or q.name)
    form = BilinearForm(gram_rows)
    if validate:
        return QuadraticAlgebra.validate(alg, form)
    return QuadraticAlgebra(alg, form, validated=False)


def is_graded_ideal(a: SuperAlgebra, sub: GradedSubspace) -> bool:
    closed = ideal_closure(a, sub)
    return closed.dim == sub.dim


def orthogonal_split(q: QuadraticAlgebra, ideal: GradedSubspace):
    """Split along a graded ideal with non-degenerate form restriction.

    Returns (component on the ideal, component on its complement, witness),
    the witness being the adapted basis columns ordered so direct_sum of the
    components reproduces the input constants in that basis.
    """
    _require_validated(q)
    if ideal.dim == 0 or ideal.dim == q.dim:
        raise PreconditionError("split requires a proper nonzero ideal")
    if not is_graded_ideal(q.algebra, ideal):
        raise PreconditionError("subspace is not an ideal")
    if linalg.det(q.form.restrict(ideal.columns)) == 0:
        raise PreconditionError("form restriction to the ideal is degenerate")
    comp = orthogonal_complement(q.form, ideal)
    qa = restrict_quadratic(q, ideal, name="%s[0]" % q.name)
    qb = restrict_quadratic(q, comp, name="%s[1]" % q.name)
    ae = ideal.even_columns()
    ao = ideal.odd_columns()
    be = comp.even_columns()
    bo = comp.odd_columns()
    witness_cols = ae + be + ao + bo
    # adapted-basis sanity: the two factors really multiply to zero
    for u in ideal.columns:
        for v in comp.columns:
            w = product(q.algebra, Element.from_seq(u), Element.from_seq(v))
            if not w.is_zero():
                raise PreconditionError("cross products do not vanish; "
                                        "split is invalid")
    return qa, qb, witness_cols


def direct_sum_quadratic(qa: QuadraticAlgebra,
                         qb: QuadraticAlgebra) -> QuadraticAlgebra:
    alg = direct_sum(qa.algebra, qb.algebra)
    amap, bmap = direct_sum_embeddings(qa.space, qb.space)
    n = alg.dim
    entries = {}
    for i in range(qa.dim):
        for j in range(qa.dim):
            v = qa.form.gram[i][j]
            if v != 0:
                entries[(amap[i], amap[j])] = v
    for i in range(qb.dim):
        for j in range(qb.dim):
            v = qb.form.gram[i][j]
            if v != 0:
                entries[(bmap[i], bmap[j])] = v
    form = BilinearForm.from_entries(n, entries)
    return QuadraticAlgebra(alg, form,
                            validated=qa.validated and qb.validated)


@dataclass(frozen=True)
class ComponentsReport:
    components: tuple  # QuadraticAlgebra per component
    bases: tuple  # adapted basis columns of each component, original coords
    exhaustive: bool
    notes: tuple = ()

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def _find_splitting_ideal(q: QuadraticAlgebra):
    """First candidate proper graded ideal with non-degenerate restriction."""
    from .core import _ideal_candidates

    a = q.algebra
    n = a.dim
    seen = set()
    candidates = list(_ideal_candidates(a))
    rep = simplicity(a)
    if rep.simple is False and rep.ideal is not None:
        candidates.append([list(c) for c in rep.ideal.columns])
    for seed in candidates:
        sub = GradedSubspace.from_vectors(a.space, seed)
        if sub.dim == 0:
            continue
        ideal = ideal_closure(a, sub)
        if not 0 < ideal.dim < n:
            continue
        key = ideal.columns
        if key in seen:
            continue
        seen.add(key)
        if linalg.det(q.form.restrict(ideal.columns)) != 0:
            return ideal
    return None


def _certified_irreducible(q: QuadraticAlgebra) -> bool:
    """Provably no splitting ideal exists (not merely none found)."""
    if q.dim <= 1:
        return True
    if (q.algebra.is_abelian() and q.space.even_dim == 0
            and q.space.odd_dim == 2):
        # every proper graded subspace is an isotropic odd line
        return True
    rep = simplicity(q.algebra)
    return rep.simple is True


def b_irreducible_components(q: QuadraticAlgebra) -> ComponentsReport:
    """Orthogonal components along non-degenerate graded ideals.

    Candidate-driven: closures of center columns, basis vectors, same-parity
    sums and pairs, seeded pseudo-random vectors, and simplicity-search
    witnesses.  The exhaustive flag is True only when every component is
    provably irreducible.
    """
    _require_validated(q)
    components = []
    bases = []
    exhaustive = True
    notes = []

    def rec(part: QuadraticAlgebra, basis_cols):
        nonlocal exhaustive
        ideal = _find_splitting_ideal(part)
        if ideal is None:
            components.append(part)
            bases.append(tuple(tuple(c) for c in basis_cols))
            if not _certified_irreducible(part):
                exhaustive = False
                notes.append("component %r: heuristic candidate search"
                             % part.name)
            return
        qa, qb, cols = orthogonal_split(part, ideal)
        lifted = [_combine(basis_cols, c) for c in cols]
        # adapted order is [A_even, B_even, A_odd, B_odd]
        ae, ao = len(ideal.even_columns()), len(ideal.odd_columns())
        be = qb.space.even_dim
        a_cols = lifted[0:ae] + lifted[ae + be:ae + be + ao]
        b_cols = lifted[ae:ae + be] + lifted[ae + be + ao:]
        rec(qa, a_cols)
        rec(qb, b_cols)

    def _combine(basis_cols, inner_col):
        # inner_col is in `part` coordinates; basis_cols maps part -> original
        n0 = len(basis_cols[0]) if basis_cols else 0
        out = [ZERO] * n0
        for idx, c in enumerate(inner_col):
            if c != 0:
                col = basis_cols[idx]
                for r in range(n0):
                    out[r] += c * col[r]
        return out

    n = q.dim
    identity_cols = [linalg.basis_vector(n, i) for i in range(n)]
    rec(q, identity_cols)
    return ComponentsReport(tuple(components), tuple(bases), exhaustive,
                            tuple(notes))
