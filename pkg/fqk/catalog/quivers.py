#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
from fqk.catalog import modules, rings
from fqk.errors import OutOfRange
from fqk.quiver.core import FusionQuiver


def s2_sign_quiver() -> FusionQuiver:
    ring = rings.rep_s2()
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("S"))], ring)


def s2_sign_chain() -> FusionQuiver:
    ring = rings.rep_s2()
    S = ring.simple("S")
    return FusionQuiver(["a", "b", "c"], [("a", "b", S), ("b", "c", S)], ring)


def sn_sign_quiver(n: int = 2) -> FusionQuiver:
    ring = rings.rep_sn(n)
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("S"))], ring)


def s3_std_quiver() -> FusionQuiver:
    ring = rings.rep_s3()
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("V"))], ring)


def s4_std_quiver() -> FusionQuiver:
    ring = rings.rep_s4()
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("V"))], ring)


def fib_edge_quiver() -> FusionQuiver:
    ring = rings.fibonacci()
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("tau"))], ring)


def fib_h4_quiver() -> FusionQuiver:
    """``a -tau-> b -1-> c -1-> d``, Coxeter graph H4"""
    ring = rings.fibonacci()
    tau, one = ring.simple("tau"), ring.one()
    return FusionQuiver(["a", "b", "c", "d"], [("a", "b", tau), ("b", "c", one), ("c", "d", one)], ring)


def verlinde_edge_quiver(level: int = 4, module: str = "regular") -> FusionQuiver:
    """``a -> b`` labeled ``V1`` at ``level``, over the regular or the type-D module"""
    ring = rings.verlinde_sl2(level)
    if module == "regular":
        M = None
    elif module == "typeD":
        M = modules.verlinde_typeD(level)
    else:
        raise OutOfRange(f"module must be 'regular' or 'typeD', got {module!r}")
    return FusionQuiver(["a", "b"], [("a", "b", ring.simple("V1"))], ring, M)


def sl3at5_quiver() -> FusionQuiver:
    M = modules.sl3at5_action()
    return FusionQuiver(["a", "b"], [("a", "b", M.labels["X"])], None, M)


def vect_kronecker() -> FusionQuiver:
    """Two parallel ``[1]`` edges; ``normalize`` merges them into one ``2[1]`` edge"""
    ring = rings.vect()
    one = ring.one()
    return FusionQuiver(["a", "b"], [("a", "b", one), ("a", "b", one)], ring)
