"""Classification verdicts, exactness ledgers and restriction certificates."""

from praag.galois import classify, exactness_ledger, res_certificate_chordal, res_certificate_ladder, verify_verdict
from praag.graph import cycle_graph, disjoint_union, fan_graph, join, ladder_graph, path_graph

for name, g in [
    ("path on 4", path_graph(4)),
    ("ladder Q3", ladder_graph(3)),
    ("5-cycle", cycle_graph(5)),
    ("Q2 + path", disjoint_union(ladder_graph(2), path_graph(4))),
    ("Q2 join point", join(ladder_graph(2), path_graph(1))),
]:
    v = classify(g)
    print(f"{name:14s} {v.status:15s} rule={v.rule:15s} realizable={v.realizable} checked={verify_verdict(g, v)}")
    for note in v.notes:
        print("  note:", note)

g = fan_graph(4)
led = exactness_ledger(g, 3)
print("\nfan ledger:", led.summary())
for r in led.rows[:4] + led.rows[-1:]:
    print(" ", r.to_dict())

cert = res_certificate_chordal(g, range(5))
print("\ncertificate for the full support:", cert.texts(), "rank", cert.rank)
cert = res_certificate_chordal(g, [0])
print("certificate for {v1}:", cert.texts(), "rank", cert.rank)

q = ladder_graph(2)
print("\nQ2 ledger:", exactness_ledger(q, 2).summary())
print("Q2 certificate:", res_certificate_ladder(q, range(6)).texts())
