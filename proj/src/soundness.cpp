#include "consta/constacode.hpp"
#include "consta/distance.hpp"
#include "consta/equivalence.hpp"
#include "consta/search.hpp"

namespace consta {

nlohmann::json SoundnessReport::to_json() const {
  return {{"codes", codes},
          {"failures", failures},
          {"by_enumerator", by_enumerator},
          {"by_certificate", by_certificate},
          {"failed", failed}};
}

SoundnessReport verify_witness(const EquivWitness& w, int max_cosets, std::uint64_t budget) {
  const FieldPtr f = make_field_q(w.q);
  const auto fam = make_family(f, w.n, w.a);
  SoundnessReport rep;
  for (const auto& spec : enumerate_family(fam, max_cosets, 0, w.n)) {
    const LinearCode c = build_code(spec);
    const LinearCode img = apply_isometry(w, c);
    ++rep.codes;
    bool ok = is_constacyclic(img, w.b);
    if (ok) {
      const int small = std::min(c.k(), c.n() - c.k());
      // counts of a code with 2^64 or more words do not fit the enumerator
      if (code_size(w.q, small) <= budget && code_size(w.q, c.k()) < UINT64_MAX) {
        ok = weight_enumerator(c, budget) == weight_enumerator(img, budget);
        ++rep.by_enumerator;
      } else {
        ok = diagonal_equivalence(c.generator(), img.generator()).has_value();
        ++rep.by_certificate;
      }
    }
    if (!ok) {
      ++rep.failures;
      rep.failed.push_back(to_text(spec));
    }
  }
  return rep;
}

}  // namespace consta
