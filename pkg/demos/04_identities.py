"""The identities the package machine-checks.

Rutherford's theorem: the coefficient of v^(tb+1) in the Homfly
polynomial is the 2-graded ruling polynomial, and the same slice of the
Dubrovnik-Kauffman polynomial counts ungraded rulings.  Consequences:
rulings certify maximal tb, and the ruling genus is bounded by the
z-degree of Homfly and hence by the canonical genus.
"""

from legfronts import analyze, connsum_check, corpus, max_tb_certificate, rho_report, rutherford_check

print("Rutherford identity across the bundled corpus:")
for name in corpus.corpus_names():
    res = rutherford_check(corpus.load(name))
    print(f"   {name:18s} tb={res.tb:3d}  slice = {res.homfly_slice}  "
          f"[{'ok' if res.passed else 'MISMATCH'}]")

print()
print("rulings certify maximal Thurston-Bennequin invariant:")
for name in ("trefoil", "stabilized_unknot"):
    cert = max_tb_certificate(corpus.load(name))
    print(f"   {name:18s} tb+1 = {cert.tb + 1:3d}, e = {cert.e:3d}, maximal = {cert.is_maximal}")

print()
print("ruling genus read off the Homfly polynomial:")
for name in ("unknot", "trefoil", "trefoil_sum"):
    rho = rho_report(corpus.load(name))
    print(f"   rho({name}) = {rho.value}")

print()
res = connsum_check(corpus.load("trefoil"), corpus.load("trefoil"))
print("connected sum multiplicativity (trefoil # trefoil):",
      "ok" if res.passed else "FAILED")

print()
report = analyze(corpus.load("51"))
print("full analysis of the 5_1 front: overall",
      "PASS" if report.ok else "FAIL")
print("   genus chain:", report.theorem1_check)
