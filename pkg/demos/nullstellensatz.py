"""Choosability by a graph-polynomial coefficient, and the wheel bound it feeds."""

from rainbow_list import constructions as cons
from rainbow_list import families as fam
from rainbow_list.polynomial import cns_choosable_certificate, graph_poly_coefficient

if __name__ == "__main__":
    g = fam.comp_sq_cycle(9)
    print("complement of C9^2:", g.n, "vertices,", g.m, "edges, 4-regular")
    print("coefficient of prod x_i^2 in prod (x_i - x_j):", graph_poly_coefficient(g, [2] * 9))
    cert = cns_choosable_certificate(g, 3)
    print("3-choosability certificate:", cert.status, cert.exponents, cert.coefficient)

    print("\ntriangle at r = 2:", cns_choosable_certificate(fam.complete(3), 2).status)

    print("\nupper bounds for srcl(W_n):")
    for n in (7, 8, 9, 10, 12):
        res = cons.srcl_wheel_upper(n)
        print(f"  W{n}: [{res.lo}, {res.hi}] via {res.upper.reason}; closed form {cons.wheel_srcl_closed_form(n)}")
