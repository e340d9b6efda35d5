/*
 * Acceptance harness. Prints one PASS/FAIL line per published criterion and
 * exits with the number of failed gates. Ranges and wall-clock limits are
 * pinned here; the exploratory channels are printed but gate only where the
 * criterion says they must hold.
 */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "syt/arrow.hpp"
#include "syt/bounce.hpp"
#include "syt/canon.hpp"
#include "syt/distribution.hpp"
#include "syt/dyck.hpp"
#include "syt/maps.hpp"
#include "syt/poset.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"
#include "fixtures.hpp"

using namespace syt;
using namespace syt::fixtures;

namespace {

constexpr double kCodecSeconds = 30.0;
constexpr double kDescentSumSeconds = 30.0;
constexpr double kNarayanaSeconds = 5.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void annotate(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

long long total_checked(const SuiteReport& report) {
  long long sum = 0;
  for (const auto& rec : report.records) sum += rec.checked;
  return sum;
}

// Gate on the suite's FAIL records and on covering the full published range.
void require_suite(Outcome& out, const SuiteReport& report) {
  out.require(report.passed(), report.suite + " has FAIL records");
  out.require(!report.truncated, report.suite + " did not cover the published range");
}

bool bounce_equals(const Tableau& t, const std::vector<std::vector<int>>& want) {
  BounceMatrix b = bounce_matrix(t);
  int k = static_cast<int>(want.size());
  if (t.rows() != k) return false;
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= k; ++s)
      if (b.at(r, s) != want[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)])
        return false;
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  int index = 0;

  auto criterion = [&](const std::string& name, auto&& body) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      body(out);
    } catch (const error& e) {
      out.ok = false;
      out.detail = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion-%02d %s (%.1fs)%s%s\n", out.ok ? "PASS" : "FAIL", index,
                name.c_str(), secs, out.detail.empty() ? "" : " ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
  };

  criterion("arrow-codec-bijection", [](Outcome& out) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite("codec");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require_suite(out, report);
    out.require(secs < kCodecSeconds, "exceeded " + std::to_string(kCodecSeconds) + "s");
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("descent-complement-sum", [](Outcome& out) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite("thm-2-1");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require_suite(out, report);
    out.require(secs < kDescentSumSeconds, "exceeded " + std::to_string(kDescentSumSeconds) + "s");
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("ascent-complement-and-reversal-shift", [](Outcome& out) {
    SuiteReport a = run_suite("thm-2-2");
    SuiteReport b = run_suite("thm-2-3");
    require_suite(out, a);
    require_suite(out, b);
    out.annotate("checked=" + std::to_string(total_checked(a) + total_checked(b)));
  });

  criterion("staircase-ascent-sum", [](Outcome& out) {
    VerifyOptions opt;
    opt.max_cells = 21;  // covers every staircase with first part <= 6
    opt.progress = true;
    SuiteReport report = run_suite("thm-2-4", opt);
    require_suite(out, report);
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("worked-examples-byte-exact", [](Outcome& out) {
    Tableau big = make_tableau(kFixtureBig);
    StatRecord s = stats(big);
    out.require(s.des_set == kFixtureBigDesSet, "descent set of the 5x6 example");
    out.require(s.des() == 13 && s.asc() == kFixtureBigAsc, "des/asc of the 5x6 example");
    out.require(s.maj == kFixtureBigMaj, "maj of the 5x6 example");
    out.require(to_text(encode(big)) == kFixtureBigArrows, "5x6 arrow text");
    out.require(decode(arrow_array_from_text(kFixtureBigArrows)) == big, "5x6 arrow decode");

    Tableau phi3 = make_tableau(kFixtureBigPhiD3);
    out.require(complement_descents_at(big, 3) == phi3, "single-row descent complement");
    out.require(complement_descents_at(phi3, 3) == big, "single-row complement involution");
    out.require(bounce_equals(big, kFixtureBigBounce), "bounce matrix of the 5x6 example");
    out.require(bounce_equals(phi3, kFixtureBigPhiD3Bounce), "bounce matrix of the complement");

    Tableau phid = make_tableau(kFixtureBigPhiD);
    out.require(complement_descents(big) == phid, "full descent complement");
    out.require(stats(phid).des() == kFixtureBigPhiDDes, "descent count after complement");

    Tableau rev = make_tableau(kFixtureBigRev);
    out.require(reverse_arrows(big) == rev, "arrow reversal");
    out.require(stats(rev).des() == kFixtureBigRevDes && stats(rev).asc() == kFixtureBigRevAsc,
                "des/asc after reversal");
    Tableau phia_rev = make_tableau(kFixtureBigPhiARev);
    out.require(complement_ascents(rev) == phia_rev, "ascent complement of the reversal");
    out.require(reverse_arrows(phid) == phia_rev, "reversal conjugation identity");

    Tableau stair = make_tableau(kFixtureStair);
    out.require(to_text(encode(stair)) == kFixtureStairArrows, "staircase arrow text");
    Tableau stair_phia = make_tableau(kFixtureStairPhiA);
    out.require(complement_ascents_distinct(stair) == stair_phia, "staircase ascent complement");
    out.require(stats(stair).asc() == kFixtureStairAsc &&
                    stats(stair_phia).asc() == kFixtureStairPhiAAsc,
                "staircase ascent counts");
    out.require(kFixtureStairAsc + kFixtureStairPhiAAsc == 10, "staircase ascent sum");

    Tableau k2in = make_tableau(kFixtureK2Input);
    Tableau k2out = make_tableau(kFixtureK2Output);
    DyckPath din = to_dyck(k2in);
    out.require(din.word() == kFixtureK2Word, "two-row path word");
    out.require(complement_descents(k2in) == k2out, "two-row descent complement");
    DyckPath dout = lalanne_kreweras(din);
    out.require(dout.word() == kFixtureK2OutputWord, "path complement word");
    out.require(dout == to_dyck(k2out), "path/tableau square commutes");
    out.require(lalanne_kreweras(dout) == din, "path complement involution");
    out.require(din.peaks() == kFixtureK2Peaks, "input peak list");
    out.require(dout.peaks() == kFixtureK2OutputPeaks, "output peak list");

    Tableau fin = make_tableau(kFixtureFInput);
    NaturalLabeling wr = NaturalLabeling::row_reading(fin.shape());
    NaturalLabeling wc = NaturalLabeling::column_reading(fin.shape());
    out.require(stats(fin).asc_set == kFixtureFAscSet, "transport input ascent set");
    out.require(block_resort(fin, kFixtureFAscSet, wr, wc) == make_tableau(kFixtureFResort),
                "containment resort step");
    Tableau fout = asc_to_hdes(fin);
    out.require(fout == make_tableau(kFixtureFOutput), "exact transport output");
    out.require(stats(fout).hdes_set == kFixtureFOutputHDes, "transport high-descent set");
    out.require(asc_to_hdes_inverse(fout) == fin, "transport inverse");

    CanonWord word = CanonWord::parse(kFixtureCanonWord);
    CanonDecomposition dec = canon_decompose(word);
    out.require(dec.sigma == kFixtureCanonSigma, "canon voice order");
    out.require(dec.tableau == make_tableau(kFixtureCanonTableau), "canon schedule tableau");
    out.require(canon_compose(dec.sigma, dec.tableau) == word, "canon recomposition");
    out.require(word.descents() == sigma_descents(dec.tableau, dec.sigma), "canon descent bridge");
  });

  criterion("narayana-histograms", [](Outcome& out) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite("narayana");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require_suite(out, report);
    out.require(secs < kNarayanaSeconds, "exceeded " + std::to_string(kNarayanaSeconds) + "s");
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("involution-structure", [](Outcome& out) {
    SuiteReport a = run_suite("conj-commute");
    SuiteReport b = run_suite("rot-commute");
    require_suite(out, a);
    require_suite(out, b);
    out.annotate("checked=" + std::to_string(total_checked(a) + total_checked(b)));
  });

  criterion("rowmotion-transport", [](Outcome& out) {
    SuiteReport report = run_suite("rowmotion");
    require_suite(out, report);
    // Cell-level refinement is a reported channel; surface its verdict.
    bool supported = true;
    for (const auto& rec : report.records)
      if (rec.check == "asc-cells-match" && rec.status != "CONJECTURE-SUPPORTED") supported = false;
    out.annotate(std::string("asc-cells ") +
                 (supported ? "CONJECTURE-SUPPORTED" : "CONJECTURE-UNSUPPORTED") +
                 " checked=" + std::to_string(total_checked(report)));
  });

  criterion("lattice-path-equivalence", [](Outcome& out) {
    SuiteReport report = run_suite("lk-equiv");
    require_suite(out, report);
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("bounce-matrix-lemmas", [](Outcome& out) {
    SuiteReport a = run_suite("bounce-lemmas");
    SuiteReport b = run_suite("three-row");
    SuiteReport c = run_suite("sulanke");
    require_suite(out, a);
    require_suite(out, b);
    require_suite(out, c);
    for (const auto& rec : c.records)
      if (rec.check == "st2-narayana")
        out.require(rec.status == "PASS", "st2 distribution on " + rec.shape);
    std::string st1 = "CONJECTURE-SUPPORTED";
    for (const auto& rec : c.records)
      if (rec.check == "st1-narayana" && rec.status != "CONJECTURE-SUPPORTED")
        st1 = rec.status;
    out.annotate("st1 " + st1 +
                 " checked=" + std::to_string(total_checked(a) + total_checked(b) + total_checked(c)));
  });

  criterion("canon-words", [](Outcome& out) {
    SuiteReport report = run_suite("canon");
    require_suite(out, report);
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("descent-set-transport", [](Outcome& out) {
    SuiteReport report = run_suite("asc-hdes");
    require_suite(out, report);
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  criterion("major-index-layer", [](Outcome& out) {
    SuiteReport report = run_suite("maj");
    require_suite(out, report);
    // The joint symmetry must report as supported over the published range.
    for (const auto& rec : report.records)
      if (rec.check == "joint-des-maj-symmetry")
        out.require(rec.status == "CONJECTURE-SUPPORTED",
                    "joint symmetry " + rec.status + " on " + rec.shape);
    out.annotate("checked=" + std::to_string(total_checked(report)));
  });

  return failures;
}
