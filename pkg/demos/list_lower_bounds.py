"""Bad list assignments: how list versions of the parameters pull away from the plain ones."""

from rainbow_list import constructions as cons
from rainbow_list import families as fam
from rainbow_list.exact import compute_param
from rainbow_list.lists import adversarial_bad_lists, compute_list_param, decide_list_leq, exists_list_colouring
from rainbow_list.rainbow import Property

if __name__ == "__main__":
    c5 = fam.cycle(5)
    verdict = decide_list_leq(c5, Property.RAINBOW, 2)
    print("C5 with 2-lists:", verdict.status, "-", verdict.bad.as_lists() if verdict.bad else "")
    print("C5 rcl =", compute_list_param(c5, "rcl").value)

    # a hub joined to two small sides; product lists on the spokes block every strong colouring
    g, L = cons.lemma41_bad_lists(3)
    print(f"\nhub gadget: n={g.n} m={g.m}, src = {compute_param(g, 'src').value}")
    print("product 2-lists admit a strong colouring?",
          exists_list_colouring(g, L, Property.STRONG).status)
    found = adversarial_bad_lists(g, Property.STRONG, 2)
    print("adversarial search rediscovers a bad assignment:", found is not None)

    pair = fam.pair_src(2, 3)
    print(f"\npair graph: src = {compute_param(pair, 'src').value}", end=", ")
    res = compute_list_param(pair, "srcl")
    print(f"srcl in [{res.lo}, {res.hi}] ({res.lower.reason} at r={res.lower.r})")
