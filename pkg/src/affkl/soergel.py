"""Krull-Schmidt splitting and the positive-characteristic canonical basis.

Indecomposable summands are cut out of tensor products by complete families
of primitive idempotents of the degree-0 endomorphism algebra.  Walking up
the Bruhat order and peeling known summands off B(y-rep) * B_s yields the
basis expansion for each element; the top summand (the unique one whose
labels reach the element itself) is stored as that element's representative.
"""

from .bimodule import LabeledBimodule, b_object, f_object, tensor
from .errors import IdentificationFailure, SolverError
from .fdalg import FDAlgebra
from .hecke import HeckeElt, mult as hecke_mult, unit as hecke_unit
from .homs import SlotMap, hom_space, solve_in_basis
from .laurent import LaurentPoly, ONE
from .linalg import SpanSolver, rref_field
from .realization import build_realization
from .weyl import bruhat_leq, omega_factorize, reduced_word, simple_reflections, wid


# -- splitting ---------------------------------------------------------------


def end0_split(m):
    """Complete list of (idempotent matrix, indecomposable summand)."""
    ring = m.real.ring
    fld = ring.field
    basis = hom_space(m, m, 0)
    slots = SlotMap(ring, m.degrees, m.degrees, 0)
    flat = [slots.flatten(p) for p in basis]
    span = SpanSolver(flat, fld)
    ident = [[ring.one if i == j else {} for j in range(m.rank)]
             for i in range(m.rank)]
    unit = span.coords(slots.flatten(ident))
    if unit is None:
        raise SolverError("identity missing from End^0")
    table = []
    for p in basis:
        row = []
        for q in basis:
            coords = span.coords(slots.flatten(ring.mat_mul(p, q)))
            if coords is None:
                raise SolverError("End^0 is not closed under composition")
            row.append(coords)
        table.append(row)
    alg = FDAlgebra(fld, table, unit)
    idems = alg.complete_primitive_idempotents()
    out = []
    for coords in idems:
        emat = [[{} for _ in range(m.rank)] for _ in range(m.rank)]
        for c, p in zip(coords, basis):
            if fld.is_zero(c):
                continue
            for i in range(m.rank):
                for j in range(m.rank):
                    if p[i][j]:
                        emat[i][j] = ring.add(emat[i][j], ring.smul(c, p[i][j]))
        out.append((emat, materialize_summand(m, emat)))
    out.sort(key=lambda t: (sorted(t[1].degrees), _label_key(t[1])))
    return out


def _label_key(s):
    return tuple(sorted((w.length, w.canonical_str()) for w, _ in s.labels))


def materialize_summand(m, emat):
    """Image of an idempotent as a labeled bimodule on a minimal basis."""
    ring = m.real.ring
    fld = ring.field
    n = m.rank
    # scalar reduction; block diagonal across basis degrees
    ebar = [[ring.constant_part(emat[i][j]) if m.degrees[i] == m.degrees[j]
             else fld.zero for j in range(n)] for i in range(n)]
    # homogeneous basis of the image: row-reduce the columns
    cols = [[ebar[i][j] for i in range(n)] for j in range(n)]
    basis_scalar, _ = rref_field(cols, fld)
    w_vecs = [list(r) for r in basis_scalar]
    degrees = []
    for w in w_vecs:
        degs = {m.degrees[i] for i, c in enumerate(w) if not fld.is_zero(c)}
        if len(degs) != 1:
            raise SolverError("scalar image vector is not degree-homogeneous")
        degrees.append(degs.pop())
    # graded Nakayama lift: v_l = e . w_l freely generates the image
    vcols = []
    for w in w_vecs:
        v = []
        for i in range(n):
            acc = {}
            for j, c in enumerate(w):
                if not fld.is_zero(c) and emat[i][j]:
                    acc = ring.add(acc, ring.smul(c, emat[i][j]))
            v.append(acc)
        vcols.append(v)
    r = len(vcols)
    acts = []
    for g in range(m.real.dim):
        mat = [[{} for _ in range(r)] for _ in range(r)]
        for l in range(r):
            av = ring.mat_vec(m.act[g], vcols[l])
            sol = solve_in_basis(vcols, degrees, av, degrees[l] + 2, ring)
            if sol is None:
                raise SolverError("right action does not restrict to the image")
            for k in range(r):
                mat[k][l] = sol[k]
        acts.append(mat)
    labels = []
    for w, xs in m.labels:
        vecs = []
        for x in xs:
            ex = []
            for i in range(n):
                acc = {}
                for j in range(n):
                    if emat[i][j] and x[j]:
                        acc = ring.add(acc, ring.mul(emat[i][j], x[j]))
                ex.append(acc)
            if all(not e for e in ex):
                continue
            xdeg = _module_degree(m, x)
            sol = solve_in_basis(vcols, degrees, ex, xdeg, ring)
            if sol is None:
                raise SolverError("idempotent image of a label left the image")
            vecs.append(tuple(sol))
        vecs = _independent_subset(vecs, ring)
        if vecs:
            labels.append((w, tuple(vecs)))
    return LabeledBimodule(
        m.real, tuple(degrees), tuple(acts), tuple(labels),
        wordlen=m.wordlen, char_hint=None)


def _independent_subset(vecs, ring):
    """Greedy maximal independent subset over the fraction field."""
    from .linalg import poly_rank

    selected = []
    for v in vecs:
        if poly_rank([list(u) for u in selected] + [list(v)], ring) > len(selected):
            selected.append(v)
    return selected


def _module_degree(m, x):
    degs = set()
    ring = m.real.ring
    for i, entry in enumerate(x):
        if entry:
            degs.add(ring.degree(entry) + m.degrees[i])
    if len(degs) != 1:
        raise SolverError("label vector is not homogeneous")
    return degs.pop()


# -- summand identification ---------------------------------------------------


def is_shifted_iso(s, t, shift):
    """Is s isomorphic to t(shift)?  Both must be indecomposable.

    Complete for indecomposables: some pair of basis morphisms composes to an
    invertible endomorphism iff the objects are isomorphic (the radical of a
    local ring absorbs sums).
    """
    if sorted(d - shift for d in t.degrees) != sorted(s.degrees):
        return False
    fwd = hom_space(s, t, shift)
    bwd = hom_space(t, s, -shift)
    fld = s.real.ring.field
    ring = s.real.ring
    for f in fwd:
        for g in bwd:
            comp = ring.mat_mul(g, f)
            scal = [[ring.constant_part(comp[i][j])
                     if s.degrees[i] == s.degrees[j] else fld.zero
                     for j in range(s.rank)] for i in range(s.rank)]
            _, pivots = rref_field(scal, fld)
            if len(pivots) == s.rank:
                return True
    return False


# -- the table ----------------------------------------------------------------


class PCanTable:
    """Expansion cache for one (datum, characteristic) pair.

    source "soergel" runs the bimodule pipeline; source "kl" (characteristic
    0 only) fills entries from the canonical-basis recursion instead.
    """

    def __init__(self, datum, char, source="soergel", realization=None, degree=1):
        if source not in ("soergel", "kl"):
            raise ValueError(source)
        if source == "kl" and char != 0:
            raise ValueError("source='kl' is only valid in characteristic 0")
        self.datum = datum
        self.char = char
        self.source = source
        self.real = realization
        if source == "soergel" and self.real is None:
            self.real = build_realization(datum, char, degree=degree)
        self.entries = {}
        self.reps = {}
        self.stats = {"computed": 0, "cache_hits": 0}

    def realization_hash(self):
        return self.real.realization_hash() if self.real else "kl"

    def ensure(self, u):
        """Compute and store the expansion of an element of W_aff."""
        if u in self.entries:
            self.stats["cache_hits"] += 1
            return self.entries[u]
        self.stats["computed"] += 1
        if self.source == "kl":
            from .hecke import canonical_basis

            out = canonical_basis(u)
            self.entries[u] = out
            return out
        if u.length == 0:
            if not u.is_identity():
                raise ValueError("ensure() expects elements of W_aff")
            out = hecke_unit(self.datum)
            self.entries[u] = out
            self.reps[u] = f_object(self.real, u)
            return out
        expansion, top = self.expansion_via_word(u, reduced_word(u))
        top.char_hint = expansion
        self.entries[u] = expansion
        self.reps[u] = top
        return expansion

    def expansion_via_word(self, u, word):
        """Decompose rep(word prefix) * B_{last letter}; no caching of u.

        Returns (expansion, top summand).  Lower terms are ensured through
        the canonical recursion.
        """
        refls = simple_reflections(self.datum, conj_search=False)
        s = refls[word[-1]]
        y = u * s.as_element
        if y.length != u.length - 1:
            raise ValueError("word does not end with a descent")
        self.ensure(y)
        rep_y = self.reps[y]
        big = tensor(rep_y, b_object(self.real, s))
        ch = hecke_mult(self.entries[y],
                        HeckeElt(self.datum, {s.as_element: ONE,
                                              wid(self.datum): LaurentPoly.v()}))
        pieces = end0_split(big)
        tops = []
        lower = []
        for _, piece in pieces:
            if u in piece.label_map():
                tops.append(piece)
            else:
                lower.append(piece)
        if len(tops) != 1:
            raise IdentificationFailure(
                f"expected one top summand for {u}, found {len(tops)}")
        expansion = ch
        for piece in lower:
            z = _top_label(piece)
            self.ensure(z)
            rep_z = self.reps[z]
            shift = min(rep_z.degrees) - min(piece.degrees)
            if not is_shifted_iso(piece, rep_z, shift):
                raise IdentificationFailure(
                    f"summand with top label {z} does not match the stored "
                    f"representative at shift {shift}")
            expansion = expansion - self.entries[z].scale(LaurentPoly.v(-shift))
        if expansion.coeff(u) != ONE:
            raise IdentificationFailure(
                f"expansion of {u} has top coefficient {expansion.coeff(u)}")
        for z in expansion.support():
            if not bruhat_leq(z, u):
                raise IdentificationFailure(
                    f"expansion of {u} is supported at {z} above it")
        return expansion, tops[0]


def _top_label(piece):
    labels = [w for w, _ in piece.labels]
    maxima = [w for w in labels if all(bruhat_leq(z, w) for z in labels)]
    if len(maxima) != 1:
        raise IdentificationFailure(
            f"summand labels {labels} have no unique maximum")
    return maxima[0]


def p_canonical(w, table):
    """Basis element for any group element; the length-zero part acts by
    left multiplication on the affine part's expansion."""
    om, u = omega_factorize(w)
    base = table.ensure(u)
    if om.is_identity():
        return base
    return hecke_mult(hecke_unit(table.datum, om), base)


def p_kl(y, w, table):
    """Coefficient polynomial of the standard basis element at y."""
    if not bruhat_leq(y, w):
        return LaurentPoly()
    return p_canonical(w, table).coeff(y)
