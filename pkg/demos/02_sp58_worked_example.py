"""End-to-end pipeline on the rank-29 symplectic worked example.

The inertial datum has two blocks: a 4-dimensional symplectic-type class
appearing twice in the GL factors with discrete-part multiplicity 6, and
the trivial character appearing three times with discrete part 9 and an
unramified-twist partner of multiplicity 4.  The assembled algebra is
the BC2 x B3 twisted affine Hecke algebra with parameters (3, 2) and
(5, 1) on the short roots.
"""

import json
from fractions import Fraction

from heckealg import BUILTIN_EXAMPLES, assemble, datum_from_json
from heckealg.pipeline import specialize_report

datum = datum_from_json(BUILTIN_EXAMPLES["sp58"])
print("blocks:")
for b in datum.blocks:
    print("   side %s  dim %d  e %d  ell %d  partner %s  torsion %s"
          % (b.side, b.dim, b.e, b.ell, b.partner_ell, b.torsion))
print()

report = assemble(datum)
print(report.to_text())
print()

# the same data as machine-readable JSON
doc = report.to_json()
print("JSON parameter table:")
print(json.dumps(doc["simple_roots"], indent=2))

# numeric specialization at q = 9 (any prime power works the same way)
print()
print("specialized at q = 9 (numeric exponents only):")
for rel in specialize_report(report, Fraction(9)):
    if "q_power_value" in rel:
        print("   %s  ->  q^m = %s" % (rel["relation"], rel["q_power_value"]))
