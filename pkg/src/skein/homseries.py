"""Poincare and Hilbert series: colored unknot, theta webs, the Hopf link.

A SeriesExpr is a finite sum of terms coef * m * prod (1 + s*m_i)^(p_i) with
monomials m in (a, q, t).  Terms keep their factors for display and expand
into a LaurentSeries on a window.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .polycore import LaurentSeries, Weight, Window, ZERO_WEIGHT, WindowExceeded, _fmt_coef


def mono_text(w: Weight) -> str:
    parts = []
    for s, e in (("a", w.a), ("q", w.q), ("t", w.t)):
        if e:
            parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Factor:
    """(1 + sign*m)^power."""
    sign: int
    mono: Weight
    power: int

    def base_text(self):
        return f"(1{'+' if self.sign > 0 else '-'}{mono_text(self.mono)})"


@dataclass(frozen=True)
class Term:
    coef: Fraction = Fraction(1)
    prefactor: Weight = ZERO_WEIGHT
    factors: tuple = ()

    def normalized(self):
        acc = {}
        for f in self.factors:
            k = (f.sign, f.mono)
            acc[k] = acc.get(k, 0) + f.power
        fs = tuple(Factor(s, m, p) for (s, m), p in acc.items() if p)
        return Term(Fraction(self.coef), self.prefactor, fs)

    def __mul__(self, o: "Term"):
        return Term(self.coef * o.coef, self.prefactor + o.prefactor, self.factors + o.factors).normalized()

    def text(self):
        num = [f for f in self.factors if f.power > 0]
        den = [f for f in self.factors if f.power < 0]
        pw = lambda f, p: f.base_text() + (f"^{p}" if p != 1 else "")
        head = []
        if self.coef != 1 or (not num and self.prefactor == ZERO_WEIGHT):
            head.append(_fmt_coef(self.coef))
        if self.prefactor != ZERO_WEIGHT:
            head.append(mono_text(self.prefactor))
        head += [pw(f, f.power) for f in num]
        s = "*".join(head) if head else "1"
        if self.coef == -1 and len(head) > 1:
            s = "-" + "*".join(head[1:])
        if den:
            d = "*".join(pw(f, -f.power) for f in den)
            s += f"/({d})" if len(den) > 1 or den[0].power < -1 else f"/{d}"
        return s


@dataclass(frozen=True)
class SeriesExpr:
    terms: tuple = field(default_factory=lambda: (Term(),))

    @classmethod
    def one(cls):
        return cls((Term(),))

    @classmethod
    def monomial(cls, w: Weight, coef=1):
        return cls((Term(Fraction(coef), w),))

    @classmethod
    def factor(cls, sign: int, mono: Weight, power: int):
        return cls((Term(factors=(Factor(sign, mono, power),)),))

    def __add__(self, o):
        return SeriesExpr(self.terms + o.terms)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return SeriesExpr(tuple(Term(t.coef * o, t.prefactor, t.factors) for t in self.terms))
        return SeriesExpr(tuple(s * t for s in self.terms for t in o.terms))

    def shifted(self, w: Weight):
        return self * SeriesExpr.monomial(w)

    def __str__(self):
        return " + ".join(t.text() for t in self.terms).replace("+ -", "- ")

    def a_coefficient(self, k: int = 0):
        """Coefficient of a^k; a may only occur in numerator factors."""
        out = []
        for t in self.terms:
            free, fixed = [], []
            for f in t.factors:
                if f.mono.a:
                    if f.power < 0:
                        raise ValueError("a occurs in a denominator")
                    free += [f] * f.power
                else:
                    fixed.append(f)
            for pick in product((0, 1), repeat=len(free)):
                w = t.prefactor
                c = t.coef
                for f, p in zip(free, pick):
                    if p:
                        w = w + f.mono
                        c *= f.sign
                if w.a == k:
                    out.append(Term(c, w, tuple(fixed)).normalized())
        return SeriesExpr(tuple(out))

    def slack(self, slope: int) -> int:
        """Height deficit of negative prefactors and numerator monomials."""
        h = lambda w: w.q + slope * w.t
        best = 0
        for t in self.terms:
            s = max(0, -h(t.prefactor)) + sum(max(0, -h(f.mono)) * f.power for f in t.factors if f.power > 0)
            best = max(best, s)
        return best

    def expand(self, window: Window = Window(), slope: int = 0, slack: int | None = None) -> LaurentSeries:
        slack = self.slack(slope) if slack is None else slack
        zero = LaurentSeries({}, window, slope, slack)
        total = zero
        for t in self.terms:
            acc = zero.one()
            for f in t.factors:
                if f.power > 0:
                    base = zero.like({ZERO_WEIGHT: 1, f.mono: f.sign})
                    for _ in range(f.power):
                        acc = acc * base
            for f in t.factors:
                if f.power < 0:
                    g = zero.geometric(f.mono, -f.sign)
                    for _ in range(-f.power):
                        acc = acc * g
            total = total + acc.shift(t.prefactor).scale(t.coef)
        return total


def sym_series(n: int) -> SeriesExpr:
    """Hilbert series of Sym in n variables of weight q^2."""
    out = SeriesExpr.one()
    for i in range(1, n + 1):
        out = out * SeriesExpr.factor(-1, Weight(2 * i), -1)
    return out


def exterior_series(n: int, dual=False) -> SeriesExpr:
    out = SeriesExpr.one()
    for i in range(1, n + 1):
        m = Weight(-2 * i, 0, 1) if dual else Weight(2 * i, 0, -1)
        out = out * SeriesExpr.factor(1, m, 1)
    return out


def deformation_series(n: int) -> SeriesExpr:
    """prod_{i<=n} 1/(1 - q^(-2i) t^2), the parameters v_1..v_n."""
    out = SeriesExpr.one()
    for i in range(1, n + 1):
        out = out * SeriesExpr.factor(-1, Weight(-2 * i, 2), -1)
    return out


def unknot_series(b: int, deformed=False, dual=False) -> SeriesExpr:
    """prod_{i<=b} (1 + a^-1 q^(2i))/(1 - q^(2i)), optionally deformed or dual."""
    out = SeriesExpr.one()
    for i in range(1, b + 1):
        m = Weight(-2 * i, 0, 1) if dual else Weight(2 * i, 0, -1)
        out = out * SeriesExpr.factor(1, m, 1) * SeriesExpr.factor(-1, Weight(2 * i), -1)
    if deformed:
        out = out * deformation_series(b)
    return out


def hh_series_of_invariant_ring(blocks, outer: int | None = None) -> SeriesExpr:
    """Hochschild series of a web bimodule free over its invariant ring.

    The bimodule is Sym(blocks) and the Koszul resolution of the outer ring
    Sym(X) with |X| = N has generators eta_k of weight a^-1 q^(2k).  Its
    differentials multiply by e_k(X) - e_k(X'), which act by zero because both
    copies of X are identified inside the bimodule, so HH is Sym(blocks)
    tensor an exterior algebra on N generators.
    """
    blocks = tuple(blocks)
    N = sum(blocks) if outer is None else outer
    out = SeriesExpr.one()
    for n in blocks:
        out = out * sym_series(n)
    return out * exterior_series(N)


def theta_shift(a: int, b: int, l: int) -> Weight:
    """q^(-(a-l)b - l(b-l)): one q^(-xy) per split/merge pair of the theta web."""
    return Weight(-(a - l) * b - l * (b - l))


def theta_web_series(a: int, b: int, l: int) -> SeriesExpr:
    return hh_series_of_invariant_ring((a - l, l, b - l)).shifted(theta_shift(a, b, l))


def hopf_summand_shift(a: int, b: int, l: int) -> Weight:
    return Weight(2 * (a - l) * (b - l) - 2 * l + a * b - l * l, 2 * l)


def hopf_parity_series(a: int, b: int, hochschild_bottom=False, deformed=False) -> SeriesExpr:
    """sum_l q^(2(a-l)(b-l)-2l) t^(2l) q^(ab-l^2) HH(theta web with edges a-l, l, b-l)."""
    if not a >= b >= 0:
        raise ValueError("need a >= b >= 0")
    out = SeriesExpr(())
    for l in range(b + 1):
        out = out + theta_web_series(a, b, l).shifted(hopf_summand_shift(a, b, l))
    if hochschild_bottom:
        out = out.a_coefficient(0)
    if deformed:
        out = out * deformation_series(a) * deformation_series(b)
    return out


def hom_to_web_series(a: int, b: int, l: int) -> SeriesExpr:
    """q^((a-l)(b-l)) * Hilbert series of Sym(X1|L|B), |X1| = a, |L| = b-l, |B| = l."""
    if not 0 <= l <= b <= a:
        raise ValueError("need 0 <= l <= b <= a")
    out = sym_series(a) * sym_series(b - l) * sym_series(l)
    return out.shifted(Weight((a - l) * (b - l)))


# ------------------------------------------------------------------ compare

def default_window(a: int, b: int) -> Window:
    return Window(-20, 20, 12, -(a + b), 0)


def _coeffs(s, window: Window, slope: int):
    if isinstance(s, SeriesExpr):
        return s.expand(window, slope).restricted()
    if isinstance(s, LaurentSeries):
        return s.restricted(window)
    return {w: c for w, c in s.items() if c}


def _lowest(coeffs, domain):
    keys = [w for w in domain if coeffs.get(w)]
    if not keys:
        return None
    t0 = min(w.t for w in keys)
    q0 = min(w.q for w in keys if w.t == t0)
    low = [w for w in keys if w.t == t0 and w.q == q0]
    if len(low) > 1:
        raise ValueError(f"ambiguous lowest term among {', '.join(map(str, low))}")
    return low[0]


@dataclass
class CompareReport:
    equal: bool
    shift: Weight
    checked: int
    mismatches: list

    def to_json(self):
        return {"schema": 1, "equal": self.equal, "shift": mono_text(self.shift), "checked": self.checked,
                "mismatches": [{"a": w.a, "q": w.q, "t": w.t, "left": _fmt_coef(x), "right": _fmt_coef(y)}
                               for w, x, y in self.mismatches[:10]]}


def compare_series(s1, s2, allow_monomial_shift=False, window: Window | None = None,
                   weights=None, slope: int = 0) -> CompareReport:
    """Compare two series on a window (or an explicit weight list).

    With allow_monomial_shift the unique monomial moving the lowest term of
    s2 onto that of s1 is applied to s2 before the full comparison.
    """
    window = window or Window()
    if weights is None:
        domain = None
    else:
        domain = list(weights)
    c1 = _coeffs(s1, window, slope)
    c2 = _coeffs(s2, window, slope)
    dom = domain if domain is not None else sorted(set(c1) | set(c2))
    shift = ZERO_WEIGHT
    if allow_monomial_shift:
        l1, l2 = _lowest(c1, dom), _lowest(c2, dom)
        if l1 is not None and l2 is not None:
            shift = l1 - l2
        if shift != ZERO_WEIGHT:
            if isinstance(s2, SeriesExpr):
                c2 = _coeffs(s2.shifted(shift), window, slope)
            else:
                c2 = {w + shift: c for w, c in c2.items()}
            if domain is None:
                dom = sorted(set(c1) | {w for w in c2 if window.contains(w)})
    bad = [(w, c1.get(w, 0), c2.get(w, 0)) for w in dom if c1.get(w, 0) != c2.get(w, 0)]
    return CompareReport(not bad, shift, len(dom), bad)


def series_table(s, window: Window, slope: int = 0):
    if isinstance(s, SeriesExpr):
        return s.expand(window, slope).table()
    return s.table(window)


def hopf_window(a: int, b: int, qmax=None, vmax=3) -> Window:
    qmax = 2 * (a + b) + 4 if qmax is None else qmax
    return Window(-2 * vmax * max(a, b, 1), qmax, 2 * vmax, 0, 0)


def hopf_crosscheck(a: int, b: int, qmax=None, vmax=3) -> CompareReport:
    """Hilbert(I_{a,b}) against the deformed bottom-Hochschild Hopf series.

    The global shift is found from the lowest terms and reported.
    """
    from .ideals import default_hilbert_weights, key_ideal
    weights = default_hilbert_weights(a, b, qmax, vmax)
    hil = key_ideal(a, b).hilbert(weights)
    s = hopf_parity_series(a, b, hochschild_bottom=True, deformed=True)
    return compare_series(hil, s, True, hopf_window(a, b, qmax, vmax), weights, slope=max(a, b))
