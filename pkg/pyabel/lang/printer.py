from .ast import Atom, Kind, Power, Sum

SEPARATOR = " (+) "


def format_atom(atom):
    if atom.kind == Kind.CYCLIC:
        return "Z/{}".format(atom.param)
    if atom.kind == Kind.PRUFER:
        return "Z({}^inf)".format(atom.param)
    if atom.kind == Kind.RPOW:
        return "R^{}".format(atom.param)
    return atom.kind.value


def format_expr(expr):
    """
    Prints an expression so that ``parse(format_expr(e)) == e``.
    """
    if isinstance(expr, Atom):
        return format_atom(expr)
    if isinstance(expr, Power):
        base = expr.expr
        # R^n is an atom of its own, and powers need a bare atom on the left.
        if isinstance(base, Atom) and base.kind not in (Kind.R, Kind.RPOW):
            inner = format_atom(base)
        else:
            inner = "({})".format(format_expr(base))
        return "{}^{}".format(inner, expr.mult)
    if isinstance(expr, Sum):
        return SEPARATOR.join(
            "({})".format(format_expr(term)) if isinstance(term, Sum) else format_expr(term) for term in expr.terms
        )
    raise ValueError("Not a group expression: {!r}".format(expr))
