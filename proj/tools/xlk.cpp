// Command-line frontend. Exit codes: 0 success or claim holds, 2 the claim
// fails (a mathematical negative), 1 tool error.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xlk/pipelines.hpp"

namespace {

using xlk::Json;

struct Common {
  xlk::RunConfig cfg;
  bool json = false;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.cfg.seed, "RNG seed");
  app->add_option("--tol", c.cfg.tol, "residual tolerance");
  app->add_option("--cutoff", c.cfg.cutoff, "relative singular value cutoff");
  app->add_option("--gap", c.cfg.gap, "certificate-grade gap ratio");
  app->add_option("--min-gap", c.cfg.min_gap, "smallest acceptable gap ratio");
  app->add_option("--step", c.cfg.h, "finite-difference step");
  app->add_option("--count", c.cfg.count, "number of sample points");
  app->add_option("--grid", c.cfg.grid, "grid side for construction I");
  app->add_flag("--json", c.json, "print JSON instead of text");
  app->add_option("-o,--out", c.out, "also write the JSON report to this file");
}

std::string cplx(const Json& z) {
  std::ostringstream s;
  s.precision(6);
  double re = z[0].get<double>(), im = z[1].get<double>();
  s << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return s.str();
}

void text_certificate(const Json& c) {
  std::cout << c.value("name", "") << " [" << c.value("pipeline", "") << ", construction " << c.value("construction", "")
            << "]\n";
  if (c.contains("derived") && c["derived"].contains("knot")) {
    const auto& k = c["derived"]["knot"];
    std::cout << "  knot: " << k["crossings"] << " crossings, determinant " << k["determinant"] << "\n";
  }
  if (c.contains("input") && c["input"].contains("note") && !c["input"]["note"].get<std::string>().empty())
    std::cout << "  note: " << c["input"]["note"].get<std::string>() << "\n";
  int k = 0;
  for (const auto& p : c["points"]) {
    std::cout << "  point " << k++ << ": residual " << p.value("residual", 0.0);
    if (p.contains("rank"))
      std::cout << ", rank " << p["rank"]["rank"] << ", gap " << p["rank"]["gap"].get<double>();
    if (p.contains("hypothesis"))
      std::cout << ", (a) " << p["hypothesis"]["condition_a"] << ", (b) " << p["hypothesis"]["condition_b"];
    std::cout << "\n";
  }
  std::cout << "  verdict: " << c["verdict"].dump() << "\n";
}

void text_bundle(const Json& b) {
  for (const auto& c : b["certificates"]) text_certificate(c);
  std::cout << (xlk::certificate_passed(b) ? "certificate passed" : "certificate failed") << "\n";
}

int finish(const Json& j, const Common& c, bool ok, void (*text)(const Json&)) {
  if (!c.out.empty()) xlk::write_text(c.out, xlk::emit_certificate(j));
  if (c.json) std::cout << xlk::emit_certificate(j);
  else text(j);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character variety dimension witnesses for knots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", XLK_VERSION);

  Common c;
  std::string braid, involution = "reflect", two_bridge, link, crossing = "c", c1 = "c1", c2 = "c2", file;
  int strands = 3, p = 0, q = 0;
  bool certify = false;
  std::vector<std::string> tangles;
  std::vector<double> ms;

  auto* ta = app.add_subcommand("trace-action", "image of (x, y, z, b, c) under a 3-strand braid");
  ta->add_option("--braid", braid, "braid word, e.g. \"s1 S2\"")->required();
  add_common(ta, c);

  auto* qc = app.add_subcommand("quotient-claim", "decide the quotient-ring claim for a 3-strand braid");
  qc->add_option("--braid", braid)->required();
  add_common(qc, c);

  auto* ri = app.add_subcommand("riley", "Riley polynomial of a two-bridge knot");
  ri->add_option("--two-bridge", two_bridge, "p/q")->required();
  ri->add_option("--m", ms, "meridian eigenvalues (real) at which to list roots");
  add_common(ri, c);

  auto* up = app.add_subcommand("u-points", "sample points of U for a 3-strand braid");
  up->add_option("--braid", braid)->required();
  add_common(up, c);

  auto* c1s = app.add_subcommand("construct1", "construction I: tangle replacement on a split link");
  c1s->add_option("--link", link, "PD JSON of the split link (default: bundled)");
  c1s->add_option("--crossing", crossing, "label of the crossing to replace");
  c1s->add_option("--tangle", tangles, "rational tangle, e.g. \"2 1\"");
  add_common(c1s, c);

  auto* c2s = app.add_subcommand("construct2", "construction II: braid b with b* under an involution");
  c2s->add_option("--braid", braid)->required();
  c2s->add_option("--involution", involution, "reflect or mirror");
  add_common(c2s, c);

  auto* th = app.add_subcommand("turks-head", "Turk's head knot Th(p, q) via the half braid");
  th->add_option("p", p)->required();
  th->add_option("q", q)->required();
  th->add_flag("--certify", certify, "add Jacobian rank data");
  add_common(th, c);

  auto* pa = app.add_subcommand("parabolic", "parabolic family from a double replacement");
  pa->add_option("--link", link, "PD JSON of T1 u T2 + O (default: bundled)");
  pa->add_option("--c1", c1);
  pa->add_option("--c2", c2);
  pa->add_option("--tangle", tangles, "two rational tangles");
  add_common(pa, c);

  auto* hy = app.add_subcommand("hypothesis", "check conditions (a), (b) at mapping-torus points");
  hy->add_option("--braid", braid)->required();
  hy->add_option("--strands", strands);
  hy->add_option("--involution", involution);
  add_common(hy, c);

  auto* k98 = app.add_subcommand("certify-10-98", "construction I certificate on the bundled split link");
  add_common(k98, c);
  auto* k99 = app.add_subcommand("certify-10-99", "construction I and II certificates for the 10_99 inputs");
  add_common(k99, c);
  auto* k123 = app.add_subcommand("certify-10-123", "construction II certificate for s1 S2 s1 S2 s1");
  add_common(k123, c);

  auto* ve = app.add_subcommand("verify", "re-run a certificate and compare");
  ve->add_option("file", file)->required();
  add_common(ve, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    c.cfg.validate();
    if (ta->parsed()) {
      Json j = xlk::trace_action_report(xlk::BraidWord::parse(braid, 3));
      return finish(j, c, j["P_preserved"].get<bool>(), [](const Json& j) {
        std::cout << "X = " << j["X"].get<std::string>() << "\nY = " << j["Y"].get<std::string>()
                  << "\nZ = " << j["Z"].get<std::string>() << "\nP preserved: " << j["P_preserved"] << "\n";
      });
    }
    if (qc->parsed()) {
      Json j = xlk::quotient_claim_report(xlk::BraidWord::parse(braid, 3), c.cfg);
      return finish(j, c, j["holds"].get<bool>(), [](const Json& j) {
        std::cout << "P = " << j["P_bar"].get<std::string>() << "\nX = " << j["X_bar"].get<std::string>()
                  << "\nY = " << j["Y_bar"].get<std::string>() << "\nZ = " << j["Z_bar"].get<std::string>()
                  << "\nmethod: " << j["method"].get<std::string>() << "\n"
                  << j["report"].get<std::string>() << "\n";
      });
    }
    if (ri->parsed()) {
      std::vector<xlk::Complex> mz(ms.begin(), ms.end());
      Json j = xlk::riley_report(two_bridge, mz);
      return finish(j, c, true, [](const Json& j) {
        std::cout << j["polynomial"].get<std::string>() << "\n";
        for (const auto& r : j["roots"]) {
          std::cout << "m = " << cplx(r["m"]) << ":";
          for (const auto& u : r["u"]) std::cout << "  " << cplx(u);
          std::cout << "\n";
        }
      });
    }
    if (up->parsed()) {
      Json j = xlk::u_points_report(xlk::BraidWord::parse(braid, 3), c.cfg);
      return finish(j, c, !j["points"].empty(), [](const Json& j) {
        for (const auto& p : j["points"])
          std::cout << "a = " << cplx(p["a"]) << "  T = " << cplx(p["T"]) << "  residual " << p["residual"].get<double>()
                    << "\n";
      });
    }
    if (c1s->parsed()) {
      Json inst = xlk::instances().at("10_98");
      std::string lk = link.empty() ? inst.at("link").get<std::string>() : link;
      std::string tg = tangles.empty() ? inst.at("tangle").get<std::string>() : tangles.front();
      Json j = xlk::construction1_certificate("construct1", lk, crossing, tg, c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_certificate);
    }
    if (c2s->parsed()) {
      auto b = xlk::BraidWord::parse(braid, 3);
      Json j = xlk::construction2_certificate("construct2", b, xlk::Involution::parse(involution, 3), c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_certificate);
    }
    if (th->parsed()) {
      Json j = xlk::turks_head_report(p, q, certify, c.cfg);
      return finish(j, c, xlk::certificate_passed(j), [](const Json& j) {
        const auto& d = j["derived"];
        std::cout << j["name"].get<std::string>() << "\n  full: " << d["full"].get<std::string>()
                  << "\n  half: " << d["half"].get<std::string>() << "\n  closure is a knot: " << d["closure"]["closure_is_knot"]
                  << "\n  half/full semantic equality: " << d["semantic_equal"] << "\n";
        int k = 0;
        for (const auto& p : j["points"]) {
          std::cout << "  point " << k++ << ": " << p["hypothesis"]["label"].get<std::string>() << " (a) "
                    << p["hypothesis"]["condition_a"] << " (b) " << p["hypothesis"]["condition_b"];
          if (p.contains("rank")) std::cout << " rank " << p["rank"]["rank"];
          std::cout << "\n";
        }
      });
    }
    if (pa->parsed()) {
      Json inst = xlk::instances().at("parabolic");
      std::string lk = link.empty() ? inst.at("link").get<std::string>() : link;
      std::vector<std::string> tg = tangles.empty() ? inst.at("tangles").get<std::vector<std::string>>() : tangles;
      if (tg.size() != 2) throw xlk::Error(xlk::ErrorKind::Parse, "parabolic needs two --tangle values");
      Json j = xlk::parabolic_certificate("parabolic", lk, c1, c2, tg[0], tg[1], c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_certificate);
    }
    if (hy->parsed()) {
      auto b = xlk::BraidWord::parse(braid, strands);
      Json j = xlk::hypothesis_report(b, xlk::Involution::parse(involution, strands), c.cfg);
      return finish(j, c, j["hypothesis_verified"].get<bool>(), [](const Json& j) {
        int k = 0;
        for (const auto& p : j["points"])
          std::cout << "point " << k++ << ": " << p["hypothesis"]["label"].get<std::string>() << " (a) "
                    << p["hypothesis"]["condition_a"] << " (b) " << p["hypothesis"]["condition_b"] << "\n";
        std::cout << (j["hypothesis_verified"].get<bool>() ? "hypothesis verified" : "hypothesis not verified") << "\n";
      });
    }
    if (k98->parsed()) {
      Json j = xlk::certify_10_98(c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_bundle);
    }
    if (k99->parsed()) {
      Json j = xlk::certify_10_99(c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_bundle);
    }
    if (k123->parsed()) {
      Json j = xlk::certify_10_123(c.cfg);
      return finish(j, c, xlk::certificate_passed(j), text_bundle);
    }
    if (ve->parsed()) {
      auto r = xlk::verify_certificate(xlk::read_json(file));
      Json j = {{"file", file}, {"ok", r.ok}, {"problems", r.problems}};
      return finish(j, c, r.ok, [](const Json& j) {
        for (const auto& p : j["problems"]) std::cout << "  " << p.get<std::string>() << "\n";
        std::cout << (j["ok"].get<bool>() ? "verified" : "verification failed") << "\n";
      });
    }
  } catch (const xlk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
