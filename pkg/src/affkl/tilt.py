"""Multiplicity tables from basis expansions evaluated at 1.

tilt_mult(w, y) is the coefficient polynomial at y of the element w's basis
expansion, evaluated at v = 1.  Hom dimensions between two objects are sums
of products of such multiplicities, and the parahoric/Whittaker variant is a
signed sum over the right parabolic subgroup.
"""

import json
from dataclasses import dataclass, field

from .errors import NegativeMultiplicity, NotMinimalRep, SupportIncomplete
from .soergel import p_canonical, p_kl
from .weyl import (
    finitary_data_over,
    is_min_double_coset_rep,
    longest_element,
    wid,
)


def tilt_mult(w, y, table):
    """Multiplicity of the standard object y in the tilting object w."""
    return p_kl(y, w, table).eval_at_one()


def _nonzero_rows(x, table):
    """Elements with nonzero multiplicity in x's expansion."""
    return {z: p.eval_at_one() for z, p in p_canonical(x, table).terms.items()}


def _check_support(contributions, support):
    if support is None:
        return
    supp = set(support)
    for z in contributions:
        if z not in supp:
            raise SupportIncomplete(
                f"nonzero multiplicity at {z} outside the given support")


def tilt_hom_dim(x, y, table, support=None):
    """dim Hom of tilting objects: sum over w of mult(x,w) * mult(y,w)."""
    mx = _nonzero_rows(x, table)
    my = _nonzero_rows(y, table)
    _check_support(mx, support)
    _check_support(my, support)
    return sum(mx[z] * my[z] for z in mx if z in my)


def parity_hom_dim(w, y, table, support=None):
    """Graded-total Hom dimension between parity objects labelled w and y."""
    return tilt_hom_dim(w, y, table, support=support)


def parabolic_tilt_mult(L, K, w, y, table, strict=True):
    """Signed multiplicity sum over W_K for the (L, K) parahoric setting.

    Both w and y must be length-additive minimal double coset representatives
    when strict is set.
    """
    datum = table.datum
    wl = longest_element(datum, L)
    wk = longest_element(datum, K)
    if strict:
        for x in (w, y):
            if not is_min_double_coset_rep(L, K, x, wl=wl, wk=wk):
                raise NotMinimalRep(f"{x} is not in the minimal coset set")
    wk_elements, _ = finitary_data_over(datum, K)
    target = p_canonical(wl * w, table)
    total = 0
    for x in wk_elements:
        val = target.coeff(y * x).eval_at_one()
        total += -val if x.length % 2 else val
    if total < 0:
        raise NegativeMultiplicity(
            f"signed sum for ({w}, {y}) came out {total}")
    return total


@dataclass
class MultTable:
    datum_fingerprint: str
    characteristic: int
    L: tuple
    K: tuple
    entries: dict = field(default_factory=dict)   # (w, y) -> int
    row_order: tuple = ()
    col_order: tuple = ()
    metadata: dict = field(default_factory=dict)

    def entry(self, w, y):
        return self.entries.get((w, y), 0)

    def to_json(self):
        rows = []
        for (w, y), m in sorted(
                self.entries.items(),
                key=lambda t: (t[0][0].length, t[0][0].canonical_str(),
                               t[0][1].length, t[0][1].canonical_str())):
            rows.append([w.canonical_str(), y.canonical_str(), m])
        return {
            "datum": self.datum_fingerprint,
            "p": self.characteristic,
            "L": list(self.L),
            "K": list(self.K),
            "entries": rows,
            "metadata": dict(sorted(self.metadata.items())),
        }

    def render_json(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render_csv(self):
        cols = list(self.col_order)
        lines = ["w\\y," + ",".join(y.canonical_str() for y in cols)]
        for w in self.row_order:
            cells = [str(self.entry(w, y)) for y in cols]
            lines.append(w.canonical_str() + "," + ",".join(cells))
        return "\n".join(lines) + "\n"

    def render_text(self):
        cols = list(self.col_order)
        headers = ["w\\y"] + [y.canonical_str() for y in cols]
        rows = [headers]
        for w in self.row_order:
            rows.append([w.canonical_str()] +
                        [str(self.entry(w, y)) for y in cols])
        widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
        out = []
        for r in rows:
            out.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
        return "\n".join(out) + "\n"

    def render_tex(self):
        cols = list(self.col_order)
        lines = [r"\begin{tabular}{l|" + "r" * len(cols) + "}"]
        lines.append(" & ".join(
            ["$w \\backslash y$"] +
            [_tex_label(y) for y in cols]) + r" \\ \hline")
        for w in self.row_order:
            lines.append(" & ".join(
                [_tex_label(w)] + [str(self.entry(w, y)) for y in cols]) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        return {
            "json": self.render_json,
            "csv": self.render_csv,
            "text": self.render_text,
            "tex": self.render_tex,
        }[fmt]()


def _tex_label(w):
    return "$" + w.canonical_str().replace(";", ";\\,") + "$"


def mult_table(L, K, max_len, table, sector="waff_only", omegas=None,
               check_z_independence=True):
    """All parahoric multiplicities (w, y) with l(w_L w) <= max_len."""
    from .weyl import min_double_coset_reps

    datum = table.datum
    wl = longest_element(datum, L)
    reps = [
        w for w in min_double_coset_reps(L, K, max_len, datum=datum,
                                         sector=sector, omegas=omegas)
        if (wl * w).length <= max_len
    ]
    wl_elements, _ = finitary_data_over(datum, L)
    out = MultTable(
        datum_fingerprint=datum.fingerprint,
        characteristic=table.char,
        L=tuple(s.index for s in L),
        K=tuple(s.index for s in K),
        metadata={"source": table.source,
                  "realization": table.realization_hash()},
    )
    out.row_order = tuple(reps)
    out.col_order = tuple(reps)
    for w in reps:
        for y in reps:
            m = parabolic_tilt_mult(L, K, w, y, table)
            if check_z_independence and L:
                for z in wl_elements:
                    alt = _signed_sum_with_left(L, K, w, z * y, table)
                    if alt != m:
                        raise NegativeMultiplicity(
                            f"left-coset sweep broke at z={z}: {alt} != {m}")
            if m:
                out.entries[(w, y)] = m
    return out


def _signed_sum_with_left(L, K, w, zy, table):
    datum = table.datum
    wl = longest_element(datum, L)
    wk_elements, _ = finitary_data_over(datum, K)
    target = p_canonical(wl * w, table)
    total = 0
    for x in wk_elements:
        val = target.coeff(zy * x).eval_at_one()
        total += -val if x.length % 2 else val
    return total
