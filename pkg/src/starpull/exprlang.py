"""The small ideal-expression language of the command line.

Grammar (whitespace insensitive, positions are byte offsets):

    expr    := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' int)*
    atom    := int | 'sqrt' '(' int ')' | 'X'
             | 'ideal' '(' expr (',' expr)* ')'
             | func '(' expr (',' expr)* ')'
             | '(' expr ')'
    func    := v | t | colon | inv | extT | alpha | beta | gamma
             | principal | hull

Scalars are exact field elements and rational functions; ideal-valued
subexpressions combine with '+' and '*'.  Every parse failure carries
the offending offset.  The printers below emit canonical forms that
re-parse to equal values, which backs the round-trip tests.
"""

from __future__ import annotations

from fractions import Fraction

from .base_domain import ClassLabel, ExtDModule, dmod_from_generators
from .kernel import FieldElem, KernelError, Poly, RatFunc
from .pullback import (
    PullbackError,
    PullbackInstance,
    RawIdeal,
    StructuredIdeal,
    TIdeal,
    as_structured,
    colon_R,
    extend_to_T,
    ideal_arith,
    structured_hull,
    t_closure_R,
    v_closure_R,
)


class ExprError(ValueError):
    """Syntax or evaluation error with a source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (offset {pos})")
        self.message = message
        self.pos = pos


_FUNCS = {
    "v": 1, "t": 1, "colon": 1, "inv": 1, "extT": 1,
    "alpha": 1, "beta": 1, "gamma": 1, "principal": 1, "hull": 1,
}

MAX_INPUT_BYTES = 64 * 1024


# -- AST ---------------------------------------------------------------------

class Node:
    __slots__ = ("kind", "value", "children", "pos")

    def __init__(self, kind, pos, value=None, children=()):
        self.kind = kind
        self.pos = pos
        self.value = value
        self.children = list(children)

    def __repr__(self):
        if self.kind in ("int", "name"):
            return f"Node({self.kind}:{self.value})"
        return f"Node({self.kind}:{self.value}, {self.children})"


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        self.skip_ws()
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ExprError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def read_int(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise ExprError("expected an integer", self.pos)
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos]), start

    def read_name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise ExprError("expected a name", start)
        return self.text[start:self.pos], start


def parse_expression(text: str) -> Node:
    """Parse the expression language; errors carry byte offsets."""
    if len(text.encode("utf-8", errors="ignore")) > MAX_INPUT_BYTES:
        raise ExprError("input exceeds 64 KiB", MAX_INPUT_BYTES)
    toks = _Tokens(text)
    node = _parse_expr(toks)
    if not toks.at_end():
        raise ExprError("trailing input", toks.pos)
    return node


def _parse_expr(toks: _Tokens) -> Node:
    node = _parse_product(toks)
    while toks.peek() in ("+", "-"):
        pos = toks.pos
        op = toks.take()
        rhs = _parse_product(toks)
        node = Node("add" if op == "+" else "sub", pos, children=(node, rhs))
    return node


def _parse_product(toks: _Tokens) -> Node:
    node = _parse_unary(toks)
    while toks.peek() in ("*", "/"):
        pos = toks.pos
        op = toks.take()
        rhs = _parse_unary(toks)
        node = Node("mul" if op == "*" else "div", pos, children=(node, rhs))
    return node


def _parse_unary(toks: _Tokens) -> Node:
    if toks.peek() == "-":
        pos = toks.pos
        toks.take()
        return Node("neg", pos, children=(_parse_unary(toks),))
    return _parse_power(toks)


def _parse_power(toks: _Tokens) -> Node:
    node = _parse_atom(toks)
    while toks.peek() == "^":
        pos = toks.pos
        toks.take()
        exponent, _ = toks.read_int()
        node = Node("pow", pos, value=exponent, children=(node,))
    return node


def _parse_atom(toks: _Tokens) -> Node:
    ch = toks.peek()
    if ch == "":
        raise ExprError("unexpected end of input", toks.pos)
    if ch.isdigit():
        value, pos = toks.read_int()
        return Node("int", pos, value=value)
    if ch == "(":
        toks.take()
        node = _parse_expr(toks)
        toks.expect(")")
        return node
    if ch.isalpha() or ch == "_":
        name, pos = toks.read_name()
        if name == "X":
            return Node("var", pos)
        if name == "sqrt":
            toks.expect("(")
            value, _ = toks.read_int()
            toks.expect(")")
            return Node("sqrt", pos, value=value)
        if name == "ideal":
            toks.expect("(")
            args = [_parse_expr(toks)]
            while toks.peek() == ",":
                toks.take()
                args.append(_parse_expr(toks))
            toks.expect(")")
            return Node("ideal", pos, children=args)
        if name in _FUNCS:
            toks.expect("(")
            args = [_parse_expr(toks)]
            while toks.peek() == ",":
                toks.take()
                args.append(_parse_expr(toks))
            toks.expect(")")
            if len(args) != _FUNCS[name]:
                raise ExprError(f"{name} takes {_FUNCS[name]} argument(s)", pos)
            return Node("call", pos, value=name, children=args)
        raise ExprError(f"unknown function {name!r}", pos)
    raise ExprError(f"unexpected character {ch!r}", toks.pos)


# -- evaluation ---------------------------------------------------------------

class PrincipalAnswer:
    """Outcome of a principality query."""

    __slots__ = ("generator",)

    def __init__(self, generator):
        object.__setattr__(self, "generator", generator)

    def __setattr__(self, name, value):
        raise AttributeError("PrincipalAnswer is immutable")

    def __eq__(self, other):
        return isinstance(other, PrincipalAnswer) and self.generator == other.generator


def evaluate(node: Node, inst: PullbackInstance):
    """Evaluate an AST against an instance; returns a scalar, an ideal,
    a T-ideal, a class label, or a PrincipalAnswer."""
    from .class_groups import alpha, beta, gamma, is_principal_R

    def ev(n: Node):
        if n.kind == "int":
            return RatFunc.coerce(n.value)
        if n.kind == "var":
            return RatFunc.x_power(1)
        if n.kind == "sqrt":
            d = n.value
            if d == 1:
                return RatFunc.one()
            if d != inst.k_disc:
                raise ExprError(f"sqrt({d}) does not lie in {inst.k_name()}", n.pos)
            return RatFunc(Poly([FieldElem(0, 1, d)]))
        if n.kind == "neg":
            val = ev(n.children[0])
            if isinstance(val, RatFunc):
                return -val
            raise ExprError("negation applies to scalars", n.pos)
        if n.kind == "pow":
            val = ev(n.children[0])
            if isinstance(val, RatFunc):
                return val ** n.value
            raise ExprError("powers apply to scalars", n.pos)
        if n.kind in ("add", "sub", "mul", "div"):
            return _binop(n, ev(n.children[0]), ev(n.children[1]), inst)
        if n.kind == "ideal":
            gens = []
            for child in n.children:
                val = ev(child)
                if not isinstance(val, RatFunc):
                    raise ExprError("ideal generators must be scalars", child.pos)
                if val.is_zero():
                    raise ExprError("zero generator rejected", child.pos)
                gens.append(val)
            return RawIdeal(gens)
        if n.kind == "call":
            return _call(n, ev(n.children[0]), inst)
        raise ExprError(f"cannot evaluate node {n.kind}", n.pos)

    try:
        return ev(node)
    except (KernelError, PullbackError) as exc:
        raise ExprError(str(exc), node.pos) from exc


def _binop(node: Node, lhs, rhs, inst: PullbackInstance):
    scalar_l = isinstance(lhs, RatFunc)
    scalar_r = isinstance(rhs, RatFunc)
    if scalar_l and scalar_r:
        if node.kind == "add":
            return lhs + rhs
        if node.kind == "sub":
            return lhs - rhs
        if node.kind == "mul":
            return lhs * rhs
        if rhs.is_zero():
            raise ExprError("division by zero", node.pos)
        return lhs / rhs
    if node.kind in ("sub", "div"):
        raise ExprError(f"{node.kind} needs scalar operands", node.pos)
    lhs = _promote(lhs, node, inst)
    rhs = _promote(rhs, node, inst)
    if scalar_l != scalar_r and node.kind == "mul":
        scalar, ideal = (lhs, rhs) if scalar_l else (rhs, lhs)
        if scalar.is_zero():
            raise ExprError("scaling an ideal by zero", node.pos)
        if isinstance(ideal, RawIdeal):
            return RawIdeal([scalar * g for g in ideal.gens])
        return ideal_arith(RawIdeal([scalar]), ideal, "mul", inst)
    op = "mul" if node.kind == "mul" else "add"
    return ideal_arith(lhs, rhs, op, inst)


def _promote(value, node: Node, inst: PullbackInstance):
    if isinstance(value, RatFunc):
        if node.kind == "add":
            if value.is_zero():
                raise ExprError("zero generator rejected", node.pos)
            return RawIdeal([value])
        return value
    if isinstance(value, TIdeal):
        return as_structured(value, inst)
    if isinstance(value, (RawIdeal, StructuredIdeal)):
        return value
    raise ExprError("operands must be scalars or ideals", node.pos)


def _call(node: Node, arg, inst: PullbackInstance):
    from .class_groups import alpha, beta, gamma, is_principal_R

    name = node.value
    if name in ("v", "t", "colon", "inv", "extT", "hull", "beta", "gamma", "principal"):
        if isinstance(arg, RatFunc):
            if arg.is_zero():
                raise ExprError("zero ideal rejected", node.pos)
            arg = RawIdeal([arg])
        if isinstance(arg, TIdeal):
            arg = as_structured(arg, inst)
        if not isinstance(arg, (RawIdeal, StructuredIdeal)):
            raise ExprError(f"{name} needs an ideal argument", node.pos)
    if name == "v":
        return v_closure_R(arg, inst)
    if name == "t":
        return t_closure_R(arg, inst)
    if name in ("colon", "inv"):
        return colon_R(arg, inst)
    if name == "extT":
        return extend_to_T(arg, inst)
    if name == "hull":
        return arg if isinstance(arg, StructuredIdeal) else structured_hull(arg, inst)
    if name == "beta":
        return beta(arg, inst)
    if name == "gamma":
        try:
            return gamma(arg, inst)
        except Exception as exc:
            raise ExprError(str(exc), node.pos) from exc
    if name == "principal":
        return PrincipalAnswer(is_principal_R(arg, inst))
    if name == "alpha":
        if not isinstance(arg, RawIdeal):
            raise ExprError("alpha takes an ideal of constant generators", node.pos)
        consts = []
        for g in arg.gens:
            if not g.is_constant():
                raise ExprError("alpha takes an ideal of constant generators", node.pos)
            consts.append(g.const_value())
        module = dmod_from_generators(consts, inst.base)
        try:
            return alpha(module, inst)
        except Exception as exc:
            raise ExprError(str(exc), node.pos) from exc
    raise ExprError(f"unknown function {name!r}", node.pos)


# -- printers -----------------------------------------------------------------

def fraction_to_expr(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator) if q.numerator >= 0 else f"(-{-q.numerator})"
    if q.numerator < 0:
        return f"(-{-q.numerator}/{q.denominator})"
    return f"{q.numerator}/{q.denominator}"


def elem_to_expr(e: FieldElem) -> str:
    if e.y == 0:
        return fraction_to_expr(e.x)
    ypart = f"{fraction_to_expr(e.y)}*sqrt({e.d})"
    if e.x == 0:
        return f"({ypart})"
    return f"({fraction_to_expr(e.x)} + {ypart})"


def poly_to_expr(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        cs = elem_to_expr(c)
        if i == 0:
            parts.append(cs)
        elif i == 1:
            parts.append(f"{cs}*X" if cs != "1" else "X")
        else:
            parts.append(f"{cs}*X^{i}" if cs != "1" else f"X^{i}")
    return " + ".join(parts)


def ratfunc_to_expr(f: RatFunc) -> str:
    if f.den.is_one():
        return f"({poly_to_expr(f.num)})"
    return f"(({poly_to_expr(f.num)})/({poly_to_expr(f.den)}))"


def value_to_expr(value, inst: PullbackInstance) -> str:
    """Canonical parseable form; re-parsing yields an equal value."""
    if isinstance(value, RatFunc):
        return ratfunc_to_expr(value)
    if isinstance(value, RawIdeal):
        return "ideal(" + ", ".join(ratfunc_to_expr(g) for g in value.gens) + ")"
    if isinstance(value, TIdeal):
        return f"extT(ideal({ratfunc_to_expr(value.gen)}))"
    if isinstance(value, StructuredIdeal):
        if value.dpart.is_full():
            return f"extT(ideal({ratfunc_to_expr(value.unit)}))"
        if value.unit.is_one():
            gens = [elem_to_expr(c) for c in value.dpart.basis_elements()]
            gens.append("X")
        else:
            u = ratfunc_to_expr(value.unit)
            gens = [f"{u}*{elem_to_expr(c)}" for c in value.dpart.basis_elements()]
            gens.append(f"{u}*X")
        return "hull(ideal(" + ", ".join(gens) + "))"
    raise PullbackError(f"no expression form for {type(value).__name__}")


def _pretty_fraction(q: Fraction) -> str:
    return str(q)


def pretty_elem(e: FieldElem) -> str:
    if e.y == 0:
        return _pretty_fraction(e.x)
    surd = "i" if e.d == -1 else f"√{e.d}"
    if e.y == 1:
        ypart = surd
    elif e.y == -1:
        ypart = f"-{surd}"
    else:
        ypart = f"{_pretty_fraction(e.y)}{surd}"
    if e.x == 0:
        return ypart
    sign = "+" if e.y > 0 else "-"
    mag = abs(e.y)
    ystr = surd if mag == 1 else f"{_pretty_fraction(mag)}{surd}"
    return f"{_pretty_fraction(e.x)}{sign}{ystr}"


def _pretty_field_name(inst: PullbackInstance) -> str:
    if inst.k_disc == 1:
        return "ℚ"
    if inst.k_disc == -1:
        return "ℚ(i)"
    return f"ℚ(√{inst.k_disc})"


def pretty_t_name(inst: PullbackInstance) -> str:
    base = f"{_pretty_field_name(inst)}[X]"
    return base if inst.t_kind == "poly" else f"{base}_(X)"


def _pretty_dpart(j: ExtDModule, inst: PullbackInstance) -> str:
    base = inst.base
    if base.kind == "field":
        return f"ℚ·({pretty_elem(j.basis_elements()[0])})"
    elems = j.basis_elements()
    if len(elems) == 1:
        g = elems[0]
        gs = pretty_elem(g)
        if g.y != 0 or g.x < 0:
            gs = f"({gs})"
        return f"{gs}ℤ" if gs != "1" else "ℤ"
    name = str(base).replace("sqrt(-5)", "√-5").replace("Z[", "ℤ[").replace("Z", "ℤ")
    return f"({', '.join(pretty_elem(e) for e in elems)}){name}" if base.kind == "quadratic_order" \
        else f"ℤ⟨{', '.join(pretty_elem(e) for e in elems)}⟩"


def _pretty_ratfunc(f: RatFunc) -> str:
    s = str(f)
    return f"({s})" if (" " in s or "/" in s) else s


def pretty_value(value, inst: PullbackInstance) -> str:
    """Human-readable canonical form (unit part times dpart basis)."""
    if isinstance(value, ClassLabel):
        return str(value)
    if isinstance(value, PrincipalAnswer):
        if value.generator is None:
            return "not principal"
        return f"principal, generator {_pretty_ratfunc(value.generator)}"
    if isinstance(value, RatFunc):
        return str(value)
    if isinstance(value, RawIdeal):
        return "(" + ", ".join(_pretty_ratfunc(g) for g in value.gens) + ")R"
    if isinstance(value, TIdeal):
        gen = _pretty_ratfunc(value.gen)
        return pretty_t_name(inst) if value.gen.is_one() else f"{gen}·{pretty_t_name(inst)}"
    if isinstance(value, StructuredIdeal):
        if value.dpart.is_full():
            gen = _pretty_ratfunc(value.unit)
            return pretty_t_name(inst) if value.unit.is_one() else f"{gen}·{pretty_t_name(inst)}"
        body = f"{_pretty_dpart(value.dpart, inst)} + X·{pretty_t_name(inst)}"
        if value.unit.is_one():
            return body
        return f"{_pretty_ratfunc(value.unit)}·({body})"
    return str(value)
