"""Exact weighted multivariate polynomials over Q with odd variables.

A Registry fixes an ordered list of variables, each carrying a Weight
(q, t, a exponents) and a parity.  A Poly is a sparse map from exponent
tuples to nonzero rationals.  Odd variables square to zero and anticommute;
monomials always store odd factors in registry order, and products pick up
the Koszul sign needed to reach that order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import flint


class RegistryMismatch(ValueError):
    pass


class WeightViolation(ValueError):
    pass


class WindowExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    q: int = 0
    t: int = 0
    a: int = 0

    def __add__(self, o):
        return Weight(self.q + o.q, self.t + o.t, self.a + o.a)

    def __sub__(self, o):
        return Weight(self.q - o.q, self.t - o.t, self.a - o.a)

    def __neg__(self):
        return Weight(-self.q, -self.t, -self.a)

    def __mul__(self, n: int):
        return Weight(self.q * n, self.t * n, self.a * n)

    __rmul__ = __mul__

    def __str__(self):
        parts = [f"{s}^{e}" for s, e in (("a", self.a), ("q", self.q), ("t", self.t)) if e]
        return "*".join(parts) if parts else "1"


ZERO_WEIGHT = Weight()


@dataclass(frozen=True)
class Var:
    name: str
    weight: Weight
    odd: bool = False


_NAME_RULES = [
    (re.compile(r"^xp?\d+$|^z\d*$"), lambda m: Weight(2, 0)),
    (re.compile(r"^yp?\d+$|^yb\d+$"), lambda m: Weight(-2, 2)),
    (re.compile(r"^(?:v|u|vd|vb|v_L|v_R|vb_L|vb_R|w)_(?:\d+_)?(\d+)$"),
     lambda m: Weight(-2 * int(m.group(1)), 2)),
    (re.compile(r"^vb?\d+_(\d+)$"), lambda m: Weight(-2 * int(m.group(1)), 2)),
]


def standard_var(name: str) -> Var:
    """Variable with the weight implied by the naming convention.

    x1, xp1, z: q^2.  y1, yb1: q^-2 t^2.  v_k, u_k, vd_k, vb_k, v_L_k, v_R_k,
    v1_k (strand 1): q^-2k t^2.  xi_k: q^2k t^-1, odd.  eta_k: a^-1 q^2k t^-1, odd.
    """
    m = re.match(r"^xi(\d+)$", name)
    if m:
        return Var(name, Weight(2 * int(m.group(1)), -1), True)
    m = re.match(r"^eta(\d+)$", name)
    if m:
        return Var(name, Weight(2 * int(m.group(1)), -1, -1), True)
    for pat, wf in _NAME_RULES:
        m = pat.match(name)
        if m:
            return Var(name, wf(m))
    return Var(name, Weight(2, 0))


class Registry:
    """Ordered, immutable list of variables."""

    def __init__(self, variables):
        vs = tuple(v if isinstance(v, Var) else standard_var(v) for v in variables)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.vars = vs
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(names)}
        self.n = len(vs)
        self.weights = tuple(v.weight for v in vs)
        self.odd = tuple(i for i, v in enumerate(vs) if v.odd)
        self.oddset = frozenset(self.odd)

    def __eq__(self, o):
        return isinstance(o, Registry) and self.vars == o.vars

    def __hash__(self):
        return hash(self.vars)

    def __contains__(self, name):
        return name in self.index

    def __repr__(self):
        return f"Registry({list(self.names)})"

    def weight_of(self, exps) -> Weight:
        q = t = a = 0
        for e, w in zip(exps, self.weights):
            if e:
                q += e * w.q
                t += e * w.t
                a += e * w.a
        return Weight(q, t, a)

    def extend(self, variables) -> "Registry":
        extra = [v if isinstance(v, Var) else standard_var(v) for v in variables]
        return Registry(list(self.vars) + [v for v in extra if v.name not in self.index])

    def var(self, name) -> "Poly":
        return Poly.var(self, name)

    def gens(self, *names):
        return [Poly.var(self, n) for n in names]

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly.const(self, 1)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _odd_sign(odd, e1, e2):
    """Koszul sign of m1*m2 after sorting odd factors; 0 if one repeats."""
    inv = 0
    seen1 = 0
    for i in reversed(odd):
        if e2[i]:
            if e1[i]:
                return 0
            inv += seen1
        if e1[i]:
            seen1 += 1
    return -1 if inv & 1 else 1


class Poly:
    """Sparse polynomial over a Registry; value semantics."""

    __slots__ = ("reg", "terms")

    def __init__(self, reg: Registry, terms=None):
        self.reg = reg
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # constructors
    @classmethod
    def const(cls, reg, c):
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls(reg, {(0,) * reg.n: c} if c else {})

    @classmethod
    def var(cls, reg, name, power=1):
        e = [0] * reg.n
        i = reg.index[name]
        if reg.vars[i].odd and power > 1:
            return cls(reg, {})
        e[i] = power
        return cls(reg, {tuple(e): 1})

    @classmethod
    def monomial(cls, reg, exps, coef=1):
        return cls(reg, {tuple(exps): coef})

    @classmethod
    def from_dict(cls, reg, d, coef=1):
        """Monomial from a name->exponent dict."""
        e = [0] * reg.n
        for k, v in d.items():
            e[reg.index[k]] = v
        return cls(reg, {tuple(e): coef})

    # basic protocol
    def _coerce(self, o):
        if isinstance(o, Poly):
            if o.reg is not self.reg and o.reg != self.reg:
                raise RegistryMismatch(f"{self.reg} vs {o.reg}")
            return o
        if isinstance(o, (int, Fraction)):
            return Poly.const(self.reg, o)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return False
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly(self.reg, {k: -v for k, v in self.terms.items()})

    def __add__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for k, v in o.terms.items():
            c = t.get(k, 0) + v
            if c:
                t[k] = c
            else:
                t.pop(k, None)
        return Poly(self.reg, t)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def scale(self, c):
        if c == 0:
            return Poly(self.reg, {})
        if isinstance(c, Fraction):
            return Poly(self.reg, {k: _norm(v * c) for k, v in self.terms.items()})
        return Poly(self.reg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.scale(o)
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        odd = self.reg.odd
        t = {}
        get = t.get
        if not odd:
            for k1, c1 in self.terms.items():
                for k2, c2 in o.terms.items():
                    k = tuple(a + b for a, b in zip(k1, k2))
                    t[k] = get(k, 0) + c1 * c2
        else:
            for k1, c1 in self.terms.items():
                for k2, c2 in o.terms.items():
                    s = _odd_sign(odd, k1, k2)
                    if not s:
                        continue
                    k = tuple(a + b for a, b in zip(k1, k2))
                    t[k] = get(k, 0) + s * c1 * c2
        return Poly(self.reg, {k: _norm(v) for k, v in t.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1, 1) / c)
        return div_exact(self, c)

    def __pow__(self, n: int):
        r = Poly.const(self.reg, 1)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    # inspection
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def weights(self):
        return {self.reg.weight_of(k) for k in self.terms}

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def weight(self) -> Weight | None:
        """Common weight, or None if the polynomial is inhomogeneous or zero."""
        ws = self.weights()
        return next(iter(ws)) if len(ws) == 1 else None

    def variables(self):
        used = set()
        for k in self.terms:
            used.update(i for i, e in enumerate(k) if e)
        return [self.reg.names[i] for i in sorted(used)]

    def degree_in(self, name):
        i = self.reg.index[name]
        return max((k[i] for k in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.reg.n, 0)

    def coefficient_of(self, mono: dict):
        e = [0] * self.reg.n
        for k, v in mono.items():
            e[self.reg.index[k]] = v
        return self.terms.get(tuple(e), 0)

    def coeffs_in(self, names):
        """Split into {exponents of `names`: coefficient Poly} (even names only)."""
        idx = [self.reg.index[n] for n in names]
        out = {}
        for k, c in self.terms.items():
            key = tuple(k[i] for i in idx)
            rest = list(k)
            for i in idx:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {key: Poly(self.reg, d) for key, d in out.items()}

    def map_coeffs(self, f):
        return Poly(self.reg, {k: _norm(f(v)) for k, v in self.terms.items()})

    def embed(self, reg: Registry) -> "Poly":
        """Same polynomial viewed in a registry containing all used variables."""
        if reg == self.reg:
            return self
        pos = [reg.index[n] for n in self.reg.names]
        t = {}
        for k, c in self.terms.items():
            e = [0] * reg.n
            for i, x in zip(pos, k):
                e[i] = x
            t[tuple(e)] = c
        return Poly(reg, t)

    def restrict(self, reg: Registry) -> "Poly":
        """View in a smaller registry; unused variables must not occur."""
        keep = [self.reg.index[n] for n in reg.names]
        t = {}
        for k, c in self.terms.items():
            if sum(k) != sum(k[i] for i in keep):
                raise RegistryMismatch("polynomial uses dropped variables")
            t[tuple(k[i] for i in keep)] = c
        return Poly(reg, t)

    def rename(self, mapping: dict) -> "Poly":
        """Permute even variables by name (a relabelling, no signs)."""
        perm = list(range(self.reg.n))
        for a, b in mapping.items():
            perm[self.reg.index[a]] = self.reg.index[b]
        t = {}
        for k, c in self.terms.items():
            e = [0] * self.reg.n
            for i, x in enumerate(k):
                if x:
                    e[perm[i]] += x
            e = tuple(e)
            t[e] = t.get(e, 0) + c
        return Poly(self.reg, t)

    def swap(self, a: str, b: str) -> "Poly":
        return self.rename({a: b, b: a})

    def subs(self, images: dict) -> "Poly":
        return SubstitutionMap(images, check=False).apply(self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Poly({to_text(self)!r})"


# ---------------------------------------------------------------- text / JSON

def _fmt_coef(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_mono(reg, k):
    parts = []
    for n, e in zip(reg.names, k):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def to_text(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, c in p.sorted_terms():
        mono = _fmt_mono(p.reg, k)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_fmt_coef(a)}*{mono}"
        else:
            body = _fmt_coef(a)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(s):
    pos = 0
    toks = []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse near {s[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        else:
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return toks


def from_text(s: str, reg: Registry | None = None) -> Poly:
    """Parse + - * / ^ and parentheses with integer literals.

    Without a registry, one is built from the names in order of first
    appearance sorted by the canonical naming rules.
    """
    toks = _tokenize(s)
    if reg is None:
        names = []
        for kind, v in toks:
            if kind == "name" and v not in names:
                names.append(v)
        reg = Registry(canonical_order(names))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        r = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            _, o = take()
            t = term()
            r = r + t if o == "+" else r - t
        return r

    def term():
        r = power()
        while peek() in (("op", "*"), ("op", "/")):
            _, o = take()
            f = power()
            if o == "*":
                r = r * f
            else:
                c = f.constant_term()
                if len(f.terms) != 1 or not c:
                    raise ValueError("division only by nonzero constants")
                r = r.scale(Fraction(1) / Fraction(c))
        return r

    def power():
        b = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            b = b ** e
        return b

    def atom():
        kind, v = take()
        if kind == "num":
            return Poly.const(reg, v)
        if kind == "name":
            if v not in reg.index:
                raise RegistryMismatch(f"unknown variable {v}")
            return Poly.var(reg, v)
        if v == "(":
            r = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return r
        if v == "-":
            return -atom()
        raise ValueError(f"unexpected token {v!r}")

    r = expr()
    if pos != len(toks):
        raise ValueError("trailing input")
    return r


def _name_key(n):
    families = ["x", "xp", "z", "y", "yp", "yb", "u", "v", "vd", "vb", "v_L", "v_R", "vb_L", "vb_R", "xi", "eta"]
    m = re.match(r"^([A-Za-z_]+?)_?(\d+)$", n)
    if m and m.group(1) in families:
        return (families.index(m.group(1)), int(m.group(2)), n)
    return (len(families), 0, n)


def canonical_order(names):
    return sorted(names, key=_name_key)


def to_json(p: Poly) -> dict:
    return {
        "vars": list(p.reg.names),
        "terms": [{"coef": _fmt_coef(c), "exps": list(k)} for k, c in p.sorted_terms()],
    }


def from_json(d: dict, reg: Registry | None = None) -> Poly:
    r = Registry(d["vars"])
    p = Poly(r, {tuple(t["exps"]): _norm(Fraction(t["coef"])) for t in d["terms"]})
    return p.embed(reg) if reg is not None else p


# ------------------------------------------------------------- substitution

class SubstitutionMap:
    """Algebra homomorphism given by images of variables (by name).

    Unmapped variables go to themselves.  Target registry is that of the
    images; the source polynomial's variables must embed there if unmapped.
    """

    def __init__(self, images: dict, check=True):
        self.images = dict(images)
        if check:
            self.check_weights()

    def check_weights(self, reg: Registry | None = None):
        for name, img in self.images.items():
            src = reg.vars[reg.index[name]].weight if reg else standard_var(name).weight
            w = img.weight()
            if img.terms and (w is None or w != src):
                raise WeightViolation(f"image of {name} has weight {w}, expected {src}")

    def target_reg(self, src: Registry):
        for img in self.images.values():
            return img.reg
        return src

    def apply(self, p: Poly) -> Poly:
        treg = self.target_reg(p.reg)
        cols = []
        for i, n in enumerate(p.reg.names):
            if n in self.images:
                cols.append(self.images[n])
            else:
                cols.append(Poly.var(treg, n) if n in treg.index else None)
        cache = {}

        def pw(i, e):
            key = (i, e)
            if key not in cache:
                if cols[i] is None:
                    raise RegistryMismatch(f"variable {p.reg.names[i]} has no image")
                cache[key] = cols[i] if e == 1 else cols[i] ** e
            return cache[key]

        out = {}
        for k, c in p.terms.items():
            acc = None
            for i, e in enumerate(k):
                if e:
                    f = pw(i, e)
                    acc = f if acc is None else acc * f
                    if not acc.terms:
                        break
            if acc is None:
                acc = Poly.const(treg, 1)
            for kk, cc in acc.terms.items():
                out[kk] = out.get(kk, 0) + c * cc
        return Poly(treg, {k: _norm(v) for k, v in out.items() if v})

    __call__ = apply

    def compose(self, then: "SubstitutionMap") -> "SubstitutionMap":
        """Map equal to applying self first and `then` afterwards."""
        imgs = {n: then.apply(img) for n, img in self.images.items()}
        for n, img in then.images.items():
            imgs.setdefault(n, img)
        return SubstitutionMap(imgs, check=False)


def apply_substitution(s: SubstitutionMap, p: Poly) -> Poly:
    return s.apply(p)


# ----------------------------------------------------------- exact division

def div_by_difference(f: Poly, a: str, b: str) -> Poly:
    """Exact quotient f/(a - b); raises if f does not vanish at a = b."""
    reg = f.reg
    ia, ib = reg.index[a], reg.index[b]
    out = {}
    rem = {}
    for k, c in f.terms.items():
        m = k[ia]
        base = list(k)
        base[ia] = 0
        # remainder: f with a -> b
        rk = list(base)
        rk[ib] += m
        rk = tuple(rk)
        rem[rk] = rem.get(rk, 0) + c
        # (a^m - b^m)/(a - b) = sum a^j b^(m-1-j)
        for j in range(m):
            e = list(base)
            e[ia] = j
            e[ib] += m - 1 - j
            e = tuple(e)
            out[e] = out.get(e, 0) + c
    if any(v for v in rem.values()):
        raise ArithmeticError(f"not divisible by {a} - {b}")
    return Poly(reg, out)


def div_exact(f: Poly, g: Poly) -> Poly:
    """Exact multivariate division by leading terms; raises on a remainder."""
    if not g.terms:
        raise ZeroDivisionError
    lk, lc = max(g.terms.items(), key=lambda kv: kv[0])
    if f.reg.odd and any(lk[i] for i in f.reg.odd):
        raise ArithmeticError("division by odd monomials is not supported")
    q = {}
    r = Poly(f.reg, dict(f.terms))
    while r.terms:
        k, c = max(r.terms.items(), key=lambda kv: kv[0])
        d = tuple(x - y for x, y in zip(k, lk))
        if min(d) < 0:
            raise ArithmeticError("not exactly divisible")
        cc = _norm(Fraction(c) / lc) if not (isinstance(c, int) and isinstance(lc, int) and c % lc == 0) else c // lc
        q[d] = cc
        r = r - Poly(f.reg, {d: cc}) * g
    return Poly(f.reg, q)


# ------------------------------------------------------------ linear algebra

def _lcm(a, b):
    from math import gcd
    return a // gcd(a, b) * b


def to_integer_rows(polys, monos=None):
    """Return (monomial list, list of integer coefficient rows)."""
    if monos is None:
        ms = set()
        for p in polys:
            ms.update(p.terms)
        monos = sorted(ms, reverse=True)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        den = 1
        for c in p.terms.values():
            if isinstance(c, Fraction):
                den = _lcm(den, c.denominator)
        row = [0] * len(monos)
        for k, c in p.terms.items():
            row[col[k]] = int(c * den)
        rows.append(row)
    return monos, rows


def _fmpz(rows, ncols):
    return flint.fmpz_mat(len(rows), ncols, [x for r in rows for x in r])


def rank_of(polys) -> int:
    polys = [p for p in polys if p.terms]
    if not polys:
        return 0
    monos, rows = to_integer_rows(polys)
    return _fmpz(rows, len(monos)).rank()


def row_basis(polys):
    """Reduced echelon basis (as polynomials) of the span of `polys`."""
    polys = [p for p in polys if p.terms]
    if not polys:
        return []
    reg = polys[0].reg
    monos, rows = to_integer_rows(polys)
    R, den, rk = _fmpz(rows, len(monos)).rref()
    out = []
    for i in range(rk):
        t = {}
        for j in range(R.ncols()):
            v = int(R[i, j])
            if v:
                t[monos[j]] = _norm(Fraction(v, int(den)))
        if not t:
            break
        out.append(Poly(reg, t))
    return out


def solve_combination(polys, target: Poly):
    """Rational c with sum c_i polys_i = target, or None if not in the span."""
    if not target.terms:
        return [0] * len(polys)
    ms = set(target.terms)
    for p in polys:
        ms.update(p.terms)
    monos = sorted(ms, reverse=True)
    if not polys:
        return None
    col = {m: i for i, m in enumerate(monos)}
    n = len(polys)
    # columns: the polys then the target; rows: monomials
    entries = [[0] * (n + 1) for _ in monos]
    for j, p in enumerate(polys):
        for k, c in p.terms.items():
            entries[col[k]][j] = c
    for k, c in target.terms.items():
        entries[col[k]][n] = c
    M = flint.fmpq_mat(len(monos), n + 1, [flint.fmpq(Fraction(x).numerator, Fraction(x).denominator) for r in entries for x in r])
    R, rk = M.rref()
    sol = [0] * n
    for i in range(rk):
        piv = next(j for j in range(n + 1) if R[i, j] != 0)
        if piv == n:
            return None
        v = R[i, n]
        sol[piv] = _norm(Fraction(int(v.p), int(v.q)))
    return sol


# ------------------------------------------------------------ graded pieces

def _positive_functional(weights):
    for K in range(0, 12):
        for sq in (1, -1):
            vals = [sq * w.q + K * w.t for w in weights]
            if all(v > 0 for v in vals):
                return lambda w, sq=sq, K=K: sq * w.q + K * w.t
    vals = [w.t for w in weights]
    if all(v > 0 for v in vals):
        return lambda w: w.t
    return None


def generator_monomials(weights, w: Weight, max_factors=64):
    """All exponent vectors n with sum n_i weights_i = w."""
    L = _positive_functional(weights)
    if L is None:
        raise WindowExceeded("generator weights admit no positive grading")
    target = L(w)
    if target < 0:
        return []
    vals = [L(x) for x in weights]
    if target > max_factors * max(vals):
        raise WindowExceeded("weight outside the enumeration window")
    out = []
    n = len(weights)

    def rec(i, rem_w, rem_l, acc):
        if i == n:
            if rem_w == ZERO_WEIGHT:
                out.append(tuple(acc))
            return
        for e in range(rem_l // vals[i] + 1):
            rec(i + 1, rem_w - weights[i] * e, rem_l - vals[i] * e, acc + [e])

    rec(0, w, target, [])
    return out


def graded_piece(ring_gens, w: Weight, max_factors=64):
    """Basis of the weight-w piece of the subring generated by `ring_gens`."""
    if not ring_gens:
        return []
    ws = []
    for g in ring_gens:
        gw = g.weight()
        if gw is None:
            raise WeightViolation("generators must be homogeneous and nonzero")
        ws.append(gw)
    reg = ring_gens[0].reg
    prods = []
    for ex in generator_monomials(ws, w, max_factors):
        p = Poly.const(reg, 1)
        for g, e in zip(ring_gens, ex):
            if e:
                p = p * g ** e
        prods.append(p)
    return row_basis(prods)


# ------------------------------------------------------------ Laurent series

@dataclass(frozen=True)
class Window:
    """Reporting window: qmin <= q <= qmax, 0 <= t <= tmax, amin <= a <= amax."""
    qmin: int = -20
    qmax: int = 20
    tmax: int = 12
    amin: int = -8
    amax: int = 0

    def contains(self, w: Weight) -> bool:
        return (self.qmin <= w.q <= self.qmax and 0 <= w.t <= self.tmax
                and self.amin <= w.a <= self.amax)


class LaurentSeries:
    """Truncated series in (a, q, t) with exact rational coefficients.

    Terms are stored while q + slope*t <= qmax + slope*tmax + slack, t <= tmax
    and amin <= a <= amax.  If every factor has q + slope*t >= 0 and a-exponents
    of a single sign, products of stored series are exact on the window; a
    monomial prefactor with q + slope*t = -s is absorbed by slack >= s.
    """

    def __init__(self, coeffs=None, window: Window = Window(), slope: int = 0, slack: int = 0):
        self.window = window
        self.slope = slope
        self.slack = slack
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            if c and self._keep(w):
                self.coeffs[w] = _norm(c)

    def _keep(self, w):
        W = self.window
        return (0 <= w.t <= W.tmax and W.amin <= w.a <= W.amax
                and w.q + self.slope * w.t <= W.qmax + self.slope * W.tmax + self.slack)

    def like(self, coeffs):
        return LaurentSeries(coeffs, self.window, self.slope, self.slack)

    def one(self):
        return self.like({ZERO_WEIGHT: 1})

    def monomial(self, w: Weight, c=1):
        return self.like({w: c})

    def __add__(self, o):
        d = dict(self.coeffs)
        for w, c in o.coeffs.items():
            d[w] = d.get(w, 0) + c
        return self.like(d)

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, c):
        return self.like({w: v * c for w, v in self.coeffs.items()})

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.scale(o)
        d = {}
        keep = self._keep
        for w1, c1 in self.coeffs.items():
            for w2, c2 in o.coeffs.items():
                w = w1 + w2
                if keep(w):
                    d[w] = d.get(w, 0) + c1 * c2
        return self.like(d)

    def shift(self, w: Weight):
        return self.like({k + w: c for k, c in self.coeffs.items()})

    def geometric(self, w: Weight, sign=1):
        """Expansion of 1/(1 - sign*m) for the monomial m of weight w."""
        if w.q + self.slope * w.t <= 0 and w.t == 0 and w.a == 0:
            raise WindowExceeded(f"1/(1-{w}) has no expansion in this window")
        d = {}
        k = 0
        while self._keep(w * k):
            d[w * k] = sign ** k
            k += 1
        return self.like(d)

    def restricted(self, window: Window | None = None):
        W = window or self.window
        return {w: c for w, c in self.coeffs.items() if W.contains(w) and c}

    def __eq__(self, o):
        return self.restricted() == o.restricted(self.window)

    def table(self, window: Window | None = None):
        items = sorted(self.restricted(window).items(), key=lambda kv: (kv[0].a, kv[0].t, kv[0].q))
        return [{"a": w.a, "q": w.q, "t": w.t, "coef": _fmt_coef(c)} for w, c in items]


# --------------------------------------------------------------- determinants

def det(M):
    """Determinant of a square matrix of Polys.

    Cofactor expansion for n <= 4, fraction-free Bareiss elimination above.
    """
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix needs a registry; use det_in")
    reg = M[0][0].reg
    if n <= 4:
        return _cofactor(M, reg)
    A = [list(r) for r in M]
    sign = 1
    prev = Poly.const(reg, 1)
    for k in range(n - 1):
        if not A[k][k].terms:
            swap = next((i for i in range(k + 1, n) if A[i][k].terms), None)
            if swap is None:
                return Poly(reg, {})
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num if prev == 1 else div_exact(num, prev)
            A[i][k] = Poly(reg, {})
        prev = A[k][k]
    return A[n - 1][n - 1].scale(sign)


def _cofactor(M, reg):
    n = len(M)
    memo = {}

    def minor(r, cols):
        if r == n:
            return Poly.const(reg, 1)
        if cols in memo:
            return memo[cols]
        acc = Poly(reg, {})
        for pos, c in enumerate(cols):
            if M[r][c].terms:
                sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
                term = M[r][c] * sub
                acc = acc + term if pos % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))
