"""Pullback instances R = phi^-1(D) inside T and their ideal calculus.

T is either a polynomial ring K[X] over a computable field K, or its
localization K[X]_(X); M = X*T is the maximal ideal at the origin and
phi is evaluation at zero, so R = {f in T : f(0) in D}.

Ideals of R come in two flavors.  A ``RawIdeal`` is a finite list of
nonzero generators in K(X).  A ``StructuredIdeal`` is the closed form
u * phi^-1(J0): a unit part u in K(X)^x and a D-module part J0.  In the
catalogued instances M = X*T is principal as a T-ideal, so the zero
module convention phi^-1(0) = M is normalized away internally: a ZERO
dpart canonicalizes to (u*X, FULL).  All closed-form operations here
(colon, divisorial closure, products) are certified in the test suite
against the definitional membership oracles at the bottom of this file.
"""

from __future__ import annotations

from .base_domain import (
    BaseDomain,
    ExtDModule,
    dmod_arith,
    dmod_colon,
    dmod_from_generators,
    dmod_scale,
    dmod_v,
)
from .kernel import (
    FieldElem,
    Poly,
    RatFunc,
    eval_at_zero,
    ord_at_zero,
    poly_gcd,
    poly_lcm,
)


class PullbackError(ValueError):
    """Ill-formed instance request or unsupported ideal operation."""


class DegreeWindow:
    """Search bounds for the definitional oracles."""

    __slots__ = ("degree", "coeff_height")

    def __init__(self, degree: int = 12, coeff_height: int = 50):
        if degree <= 0 or coeff_height <= 0:
            raise PullbackError("window bounds must be positive")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeff_height", coeff_height)

    def __setattr__(self, name, value):
        raise AttributeError("DegreeWindow is immutable")


class PullbackInstance:
    """One catalogued diagram: D inside k = T/M with T = K[X] or K[X]_(X)."""

    def __init__(self, name: str, base: BaseDomain, k_disc: int, t_kind: str):
        if t_kind not in ("poly", "local"):
            raise PullbackError(f"unsupported T kind {t_kind!r}")
        if base.k_disc != k_disc:
            raise PullbackError("base domain not contained in the residue field")
        self.name = name
        self.base = base
        self.k_disc = k_disc
        self.t_kind = t_kind
        self.is_square_plus = base.quotient_field_is_k()
        self.t_quasilocal = t_kind == "local"
        # constants K^x are units of T and phi fixes them, so every class
        # of k^x modulo U(D) has a unit preimage
        self.phi_tilde_surjective = True

    def __repr__(self):
        return f"PullbackInstance({self.name!r})"

    def k_name(self) -> str:
        if self.k_disc == 1:
            return "Q"
        if self.k_disc == -1:
            return "Q(i)"
        return f"Q(sqrt({self.k_disc}))"

    def t_name(self) -> str:
        ring = f"{self.k_name()}[X]"
        return ring if self.t_kind == "poly" else f"{ring}_(X)"

    def scalar(self, value) -> FieldElem:
        return FieldElem.coerce(value)

    def member_T(self, f: RatFunc) -> bool:
        f = RatFunc.coerce(f)
        if f.is_zero():
            return True
        if self.t_kind == "poly":
            return f.is_polynomial()
        return ord_at_zero(f) >= 0

    def is_unit_T(self, f: RatFunc) -> bool:
        f = RatFunc.coerce(f)
        if f.is_zero():
            return False
        if self.t_kind == "poly":
            return f.is_constant()
        return ord_at_zero(f) == 0

    def member_M(self, f: RatFunc) -> bool:
        f = RatFunc.coerce(f)
        if f.is_zero():
            return True
        return self.member_T(f) and ord_at_zero(f) >= 1


_CATALOG_SPECS = {
    "A": ("integers", 1, "poly"),
    "B": ("integers", 1, "local"),
    "C": ("quadratic_order", -5, "poly"),
    "D": ("integers", -1, "poly"),
    "E": ("field", -1, "local"),
}


def _build_instance(name: str) -> PullbackInstance:
    kind, d, t_kind = _CATALOG_SPECS[name]
    base = BaseDomain(kind, d)
    return PullbackInstance(name, base, d, t_kind)


_INSTANCE_CACHE: dict[str, PullbackInstance] = {}


def instance_catalog() -> list[str]:
    return sorted(_CATALOG_SPECS)


def make_instance(config) -> PullbackInstance:
    """Resolve a config (name string or flat mapping) to an instance.

    Mappings either carry ``instance = <name>`` or the explicit fields
    ``base`` (integers | quadratic(d) | field), ``k`` (rational |
    quadratic(d)) and ``T`` (poly | local), which must match a
    catalogued combination.
    """
    if isinstance(config, str):
        name = config.strip().strip('"')
        if name not in _CATALOG_SPECS:
            raise PullbackError(f"unknown instance {name!r}; catalog is A..E")
        if name not in _INSTANCE_CACHE:
            _INSTANCE_CACHE[name] = _build_instance(name)
        return _INSTANCE_CACHE[name]
    if "instance" in config:
        return make_instance(str(config["instance"]))
    try:
        base_spec = str(config["base"]).strip()
        t_kind = str(config["T"]).strip()
        k_spec = str(config.get("k", "rational")).strip()
    except KeyError as exc:
        raise PullbackError(f"config missing field {exc}") from exc
    kind, d = _parse_base_spec(base_spec)
    k_d = _parse_field_spec(k_spec)
    if kind == "quadratic_order":
        k_d = d
    target = (kind, k_d, t_kind)
    for name, spec in _CATALOG_SPECS.items():
        if spec == target:
            return make_instance(name)
    raise PullbackError(f"unsupported combination {target}; catalog is A..E")


def _parse_base_spec(text: str) -> tuple[str, int]:
    if text == "integers":
        return "integers", 1
    if text == "field":
        return "field", -1
    if text.startswith("quadratic(") and text.endswith(")"):
        return "quadratic_order", int(text[10:-1])
    raise PullbackError(f"cannot parse base domain spec {text!r}")


def _parse_field_spec(text: str) -> int:
    if text in ("rational", "Q"):
        return 1
    if text in ("gaussian", "Q(i)"):
        return -1
    if text.startswith("quadratic(") and text.endswith(")"):
        return int(text[10:-1])
    raise PullbackError(f"cannot parse field spec {text!r}")


# ---------------------------------------------------------------------------
# ideal values
# ---------------------------------------------------------------------------

class RawIdeal:
    """A finitely generated fractional ideal given by its generators."""

    __slots__ = ("gens",)

    def __init__(self, gens):
        gens = tuple(RatFunc.coerce(g) for g in gens)
        if not gens:
            raise PullbackError("an ideal needs at least one generator")
        if any(g.is_zero() for g in gens):
            raise PullbackError("zero generators are not allowed")
        object.__setattr__(self, "gens", gens)

    def __setattr__(self, name, value):
        raise AttributeError("RawIdeal is immutable")

    def __eq__(self, other):
        return isinstance(other, RawIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"RawIdeal({list(self.gens)!r})"


class StructuredIdeal:
    """Canonical closed form u * phi^-1(J0).

    The dpart J0 is a lattice module or FULL; a ZERO input dpart is
    normalized to (u*X, FULL) through the identity M = X*T.  The unit
    part is monic/monic for the polynomial kind and a pure power of X for
    the local kind, with the absorbed constant pushed into the dpart, so
    representations are unique.
    """

    __slots__ = ("unit", "dpart")

    def __init__(self, unit: RatFunc, dpart: ExtDModule):
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "dpart", dpart)

    def __setattr__(self, name, value):
        raise AttributeError("StructuredIdeal is immutable")

    def is_t_module(self) -> bool:
        return self.dpart.is_full()

    def __eq__(self, other):
        return (
            isinstance(other, StructuredIdeal)
            and self.unit == other.unit
            and self.dpart == other.dpart
        )

    def __hash__(self):
        return hash((self.unit, self.dpart))

    def __repr__(self):
        return f"StructuredIdeal({self.unit!r}, {self.dpart!r})"


class TIdeal:
    """A fractional T-ideal c*T with canonical generator."""

    __slots__ = ("gen",)

    def __init__(self, gen: RatFunc):
        if gen.is_zero():
            raise PullbackError("zero is not a fractional T-ideal")
        object.__setattr__(self, "gen", gen)

    def __setattr__(self, name, value):
        raise AttributeError("TIdeal is immutable")

    def __eq__(self, other):
        return isinstance(other, TIdeal) and self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return f"TIdeal({self.gen!r})"


def make_structured(unit: RatFunc, dpart: ExtDModule, inst: PullbackInstance) -> StructuredIdeal:
    """Canonicalize (unit, dpart) under scaling and the M = X*T identity."""
    unit = RatFunc.coerce(unit)
    if unit.is_zero():
        raise PullbackError("unit part must be nonzero")
    if dpart.is_zero():
        unit = unit * RatFunc.x_power(1)
        dpart = ExtDModule.full(inst.base)
    if inst.t_kind == "poly":
        c = unit.num.leading()
        if not (c.x == 1 and c.y == 0):
            unit = unit / RatFunc.coerce(Poly.const(c))
            if dpart.is_lattice():
                dpart = dmod_scale(c, dpart)
    else:
        e = ord_at_zero(unit)
        c = eval_at_zero(unit / RatFunc.x_power(e))
        unit = RatFunc.x_power(e)
        if dpart.is_lattice() and not (c.x == 1 and c.y == 0):
            dpart = dmod_scale(c, dpart)
    return StructuredIdeal(unit, dpart)


def r_ideal(inst: PullbackInstance) -> StructuredIdeal:
    return make_structured(RatFunc.one(), inst.base.unit_module(), inst)


def t_ideal_of_r(inst: PullbackInstance) -> StructuredIdeal:
    return make_structured(RatFunc.one(), ExtDModule.full(inst.base), inst)


def m_ideal(inst: PullbackInstance) -> StructuredIdeal:
    return make_structured(RatFunc.one(), ExtDModule.zero(inst.base), inst)


# ---------------------------------------------------------------------------
# membership and containment
# ---------------------------------------------------------------------------

def member_R(f: RatFunc, inst: PullbackInstance) -> bool:
    """f in R, i.e. f in T with value at zero inside D."""
    f = RatFunc.coerce(f)
    if f.is_zero():
        return True
    if not inst.member_T(f):
        return False
    return inst.base.contains_scalar(eval_at_zero(f))


def member_structured(f: RatFunc, s: StructuredIdeal, inst: PullbackInstance) -> bool:
    f = RatFunc.coerce(f)
    if f.is_zero():
        return True
    g = f / s.unit
    if not inst.member_T(g):
        return False
    if s.dpart.is_full():
        return True
    return s.dpart.contains(eval_at_zero(g))


def member_ideal(f: RatFunc, ideal, inst: PullbackInstance) -> bool:
    if isinstance(ideal, RawIdeal):
        ideal = structured_hull(ideal, inst)
    if isinstance(ideal, TIdeal):
        return inst.member_T(RatFunc.coerce(f) / ideal.gen)
    return member_structured(f, ideal, inst)


def contains_ideal(outer, inner, inst: PullbackInstance) -> bool:
    """inner is a subset of outer, decided on closed forms."""
    if isinstance(inner, RawIdeal):
        return all(member_ideal(g, outer, inst) for g in inner.gens)
    if isinstance(inner, TIdeal):
        inner = as_structured(inner, inst)
    if isinstance(outer, (RawIdeal, TIdeal)):
        outer = as_structured(outer, inst)
    w = inner.unit / outer.unit
    if inner.dpart.is_full():
        if outer.dpart.is_full():
            return inst.member_T(w)
        return inst.member_M(w)
    for c in inner.dpart.basis_elements():
        wc = w * RatFunc.coerce(Poly.const(c))
        if not inst.member_T(wc):
            return False
        if not outer.dpart.is_full() and not outer.dpart.contains(eval_at_zero(wc)):
            return False
    # the M part of the inner ideal
    if inst.member_T(w):
        return True
    wx = w * RatFunc.x_power(1)
    return outer.dpart.is_full() and inst.member_T(wx)


def ideal_equal(a, b, inst: PullbackInstance) -> bool:
    return as_structured(a, inst) == as_structured(b, inst)


def as_structured(ideal, inst: PullbackInstance) -> StructuredIdeal:
    if isinstance(ideal, StructuredIdeal):
        return ideal
    if isinstance(ideal, TIdeal):
        return make_structured(ideal.gen, ExtDModule.full(inst.base), inst)
    return structured_hull(ideal, inst)


# ---------------------------------------------------------------------------
# content and hull
# ---------------------------------------------------------------------------

def content_T(ideal: RawIdeal, inst: PullbackInstance) -> tuple[RatFunc, RawIdeal]:
    """Generator u of the T-ideal spanned by the generators, and I/u.

    The reduced part extends to the unit ideal of T.
    """
    gens = ideal.gens
    if inst.t_kind == "local":
        e = min(ord_at_zero(g) for g in gens)
        u = RatFunc.x_power(e)
        return u, RawIdeal([g / u for g in gens])
    den = Poly.one()
    for g in gens:
        den = poly_lcm(den, g.den)
    numerators = [g.num * (den // g.den) for g in gens]
    g0 = numerators[0]
    for p in numerators[1:]:
        g0 = poly_gcd(g0, p)
    u = RatFunc(g0, den)
    return u, RawIdeal([g / u for g in gens])


def structured_hull(ideal: RawIdeal, inst: PullbackInstance) -> StructuredIdeal:
    """Smallest structured ideal containing the raw ideal: I + u*M."""
    u, reduced = content_T(ideal, inst)
    values = [eval_at_zero(g) for g in reduced.gens]
    j0 = dmod_from_generators(values, inst.base)
    assert not j0.is_zero(), "reduced generators cannot all vanish at zero"
    return make_structured(u, j0, inst)


# ---------------------------------------------------------------------------
# closed-form colon, closures, arithmetic
# ---------------------------------------------------------------------------

def colon_R(ideal, inst: PullbackInstance, certify: bool = True) -> StructuredIdeal:
    """(R : I) computed through the D-side colon of the hull dpart."""
    s = as_structured(ideal, inst)
    j_colon = dmod_colon(s.dpart, inst.base)
    result = make_structured(s.unit.inv(), j_colon, inst)
    if certify:
        _certify_colon(result, ideal, inst)
    return result


def _certify_colon(result: StructuredIdeal, ideal, inst: PullbackInstance) -> None:
    # soundness spot-check: canonical members of the closed form multiply
    # every generator of the input back into R
    probes = lift_generators(result, inst, powers=1)
    gens = ideal.gens if isinstance(ideal, RawIdeal) else lift_generators(as_structured(ideal, inst), inst, powers=1)
    for p in probes:
        for g in gens:
            if not member_R(p * g, inst):
                raise AssertionError("closed-form colon failed definitional certification")


def lift_generators(s: StructuredIdeal, inst: PullbackInstance, powers: int = 0) -> list[RatFunc]:
    """Elements of u*phi^-1(J0) that witness its structure.

    For a lattice dpart these are the constant lifts of a basis plus
    u*X^j probes; they generate the ideal over R together with u*M.
    """
    out = []
    if s.dpart.is_full():
        out.append(s.unit)
    else:
        for c in s.dpart.basis_elements():
            out.append(s.unit * RatFunc.coerce(Poly.const(c)))
    for j in range(1, powers + 1):
        out.append(s.unit * RatFunc.x_power(j))
    return out


def v_closure_R(ideal, inst: PullbackInstance) -> StructuredIdeal:
    """Divisorial closure (R : (R : I)) in closed form."""
    s = as_structured(ideal, inst)
    return make_structured(s.unit, dmod_v(s.dpart, inst.base), inst)


def t_closure_R(ideal, inst: PullbackInstance) -> StructuredIdeal:
    # on finitely generated and structured inputs the finite-type closure
    # agrees with the divisorial one
    return v_closure_R(ideal, inst)


def ideal_arith(a, b, op: str, inst: PullbackInstance):
    """Products and sums; raw inputs stay raw for raw-raw products."""
    if op == "mul":
        if isinstance(a, RawIdeal) and isinstance(b, RawIdeal):
            return RawIdeal([f * g for f in a.gens for g in b.gens])
        sa, sb = as_structured(a, inst), as_structured(b, inst)
        return make_structured(sa.unit * sb.unit, dmod_arith(sa.dpart, sb.dpart, "mul"), inst)
    if op == "add":
        if isinstance(a, RawIdeal) and isinstance(b, RawIdeal):
            return RawIdeal(list(a.gens) + list(b.gens))
        sa, sb = as_structured(a, inst), as_structured(b, inst)
        return _structured_sum(sa, sb, inst)
    raise PullbackError(f"unknown ideal operation {op!r}")


def _structured_sum(sa: StructuredIdeal, sb: StructuredIdeal, inst: PullbackInstance) -> StructuredIdeal:
    # common content g, then the value modules add with unit weights
    if inst.t_kind == "local":
        ea, eb = ord_at_zero(sa.unit), ord_at_zero(sb.unit)
        g = RatFunc.x_power(min(ea, eb))
    else:
        den = poly_lcm(sa.unit.den, sb.unit.den)
        num = poly_gcd(sa.unit.num * (den // sa.unit.den), sb.unit.num * (den // sb.unit.den))
        g = RatFunc(num, den)
    parts = []
    for s in (sa, sb):
        w = s.unit / g
        if s.dpart.is_full():
            if inst.member_M(w):
                continue
            parts.append(ExtDModule.full(inst.base))
            continue
        value = eval_at_zero(w)
        if value.is_zero():
            continue
        parts.append(dmod_scale(value, s.dpart))
    total = ExtDModule.zero(inst.base)
    for p in parts:
        total = dmod_arith(total, p, "add")
    return make_structured(g, total, inst)


def extend_to_T(ideal, inst: PullbackInstance) -> TIdeal:
    """The T-ideal I*T, always principal here."""
    if isinstance(ideal, RawIdeal):
        u, _ = content_T(ideal, inst)
        return TIdeal(_canonical_t_gen(u, inst))
    s = as_structured(ideal, inst)
    return TIdeal(_canonical_t_gen(s.unit, inst))


def _canonical_t_gen(u: RatFunc, inst: PullbackInstance) -> RatFunc:
    if inst.t_kind == "local":
        return RatFunc.x_power(ord_at_zero(u))
    c = u.num.leading()
    return u / RatFunc.coerce(Poly.const(c))


def colon_T(t: TIdeal) -> TIdeal:
    return TIdeal(t.gen.inv())


def v_closure_T(t: TIdeal) -> TIdeal:
    return colon_T(colon_T(t))


def inverse_image_R(j: ExtDModule, inst: PullbackInstance) -> StructuredIdeal:
    """phi^-1(J) as a structured ideal; the zero module maps to M."""
    return make_structured(RatFunc.one(), j, inst)


class UnitGroupPredicates:
    __slots__ = ("in_S", "in_N")

    def __init__(self, in_s, in_n):
        object.__setattr__(self, "in_S", in_s)
        object.__setattr__(self, "in_N", in_n)

    def __setattr__(self, name, value):
        raise AttributeError("UnitGroupPredicates is immutable")


def unit_group_predicates(f: RatFunc, inst: PullbackInstance) -> UnitGroupPredicates:
    """Membership in S = U(T) meet R and in N = {x in R : phi(x) in U(D)}."""
    f = RatFunc.coerce(f)
    in_r = member_R(f, inst)
    in_s = in_r and inst.is_unit_T(f)
    in_n = False
    if in_r and not f.is_zero() and ord_at_zero(f) == 0:
        in_n = inst.base.is_unit_scalar(eval_at_zero(f))
    return UnitGroupPredicates(in_s, in_n)


# ---------------------------------------------------------------------------
# definitional oracles
# ---------------------------------------------------------------------------

def oracle_colon_member(g: RatFunc, ideal: RawIdeal, inst: PullbackInstance) -> bool:
    """Exact test g in (R : I): multiply through every generator."""
    g = RatFunc.coerce(g)
    return all(member_R(g * f, inst) for f in ideal.gens)


class OracleVerdict:
    __slots__ = ("status", "witness")

    def __init__(self, status: str, witness: RatFunc | None = None):
        object.__setattr__(self, "status", status)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("OracleVerdict is immutable")

    def __repr__(self):
        return f"OracleVerdict({self.status!r}, {self.witness!r})"


def _colon_probe_family(ideal: RawIdeal, inst: PullbackInstance, window: DegreeWindow) -> list[RatFunc]:
    hull = structured_hull(ideal, inst)
    j_colon = dmod_colon(hull.dpart, inst.base)
    inv_u = hull.unit.inv()
    probes = []
    if j_colon.is_lattice():
        for c in j_colon.basis_elements():
            lift = RatFunc.coerce(Poly.const(c))
            for j in range(0, window.degree + 1):
                probes.append(inv_u * lift * RatFunc.x_power(j))
    for j in range(1, window.degree + 1):
        probes.append(inv_u * RatFunc.x_power(j))
    return probes


def certified_colon_probes(ideal: RawIdeal, inst: PullbackInstance,
                           window: DegreeWindow | None = None) -> list[RatFunc]:
    """Probe family for (R : I), each member certified definitionally."""
    window = window or DegreeWindow()
    return [g for g in _colon_probe_family(ideal, inst, window)
            if oracle_colon_member(g, ideal, inst)]


def oracle_v_member(h: RatFunc, ideal: RawIdeal, inst: PullbackInstance,
                    window: DegreeWindow | None = None,
                    probes: list[RatFunc] | None = None) -> OracleVerdict:
    """Definitional probe of h in (R : (R : I)).

    Every probe g is certified inside (R : I) by oracle_colon_member
    before use; a probe with h*g outside R is an exclusion witness.
    """
    h = RatFunc.coerce(h)
    certified = probes if probes is not None else certified_colon_probes(ideal, inst, window)
    for g in certified:
        if not member_R(h * g, inst):
            return OracleVerdict("out-with-witness", g)
    if member_structured(h, v_closure_R(ideal, inst), inst) and certified:
        return OracleVerdict("in")
    return OracleVerdict("inconclusive")
