#include "tdp/cli.hpp"
#include "tdp/corpus.hpp"
#include "tdp/error.hpp"
#include "tdp/json_io.hpp"
#include "tdp/markov.hpp"
#include "tdp/qgdeform.hpp"
#include "tdp/quotsing.hpp"
#include "tdp/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tdp::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

Integer integer_arg(const std::string& text, const char* what) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an integer, got '" + text + "'");
  }
}

std::vector<Integer> integer_list(const std::string& text, const char* what) {
  std::vector<Integer> out;
  for (const auto& part : split(text, ',')) out.push_back(integer_arg(part, what));
  return out;
}

std::vector<LatticeVector> parse_rays(const std::string& text) {
  std::vector<LatticeVector> rays;
  for (const auto& pair : split(text, ';')) {
    auto xy = integer_list(pair, "ray coordinate");
    if (xy.size() != 2) throw Error(ErrorKind::InvalidInput, "ray '" + pair + "' must be x,y");
    rays.push_back({xy[0], xy[1]});
  }
  return rays;
}

std::string chain_text(const HJChain& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + to_string(chain[i]);
  return s + "]";
}

std::string content_text(const std::vector<SingularityClass>& sings) {
  if (sings.empty()) return "none";
  std::string s;
  for (const auto& c : sings) s += (s.empty() ? "" : ", ") + c.label();
  return s;
}

void print_surface(std::ostream& out, const ToricSurface& s) {
  out << "rays:";
  for (const auto& v : s.fan().rays()) out << " (" << v.x << "," << v.y << ")";
  out << "\nsingularities: " << content_text(s.singularities()) << "\n"
      << "rho: " << s.rho() << "\n"
      << "K^2: " << to_string(s.k2()) << "\n"
      << "del Pezzo: " << (s.del_pezzo() ? "yes" : "no") << "\n"
      << "s: " << s.s() << "\n";
  auto defect = s.noether_defect();
  out << "noether defect: " << (defect ? to_string(*defect) : std::string("n/a (non-T point)")) << "\n";
}

void print_record(std::ostream& out, const SurfaceRecord& rec) {
  BoundReport b = bound_report(rec);
  out << "rho " << rec.rho << "  K^2 " << to_string(rec.k2) << "  s " << b.s << "  margin " << b.margin << " ("
      << to_string(b.cls) << ")  sings: " << content_text(rec.singularities) << "\n";
}

bool record_sound(const SurfaceRecord& rec) {
  return bound_report(rec).margin >= 0 && (!rec.all_t() || rec.noether_defect() == 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with T-singular del Pezzo surfaces", "tdp"};
  app.require_subcommand(1);

  std::string r_text, a_text;
  bool json_out = false;

  auto* resolve = app.add_subcommand("resolve", "Canonical form, Hirzebruch-Jung chain and index of 1/R(1,A)");
  resolve->add_option("R", r_text)->required();
  resolve->add_option("A", a_text)->required();
  resolve->add_flag("--json", json_out);

  auto* tclass = app.add_subcommand("tclass", "T-singularity witness of 1/R(1,A) (JSON)");
  tclass->add_option("R", r_text)->required();
  tclass->add_option("A", a_text)->required();
  tclass->add_flag("--json", json_out);

  std::string rays_text;
  auto* fan = app.add_subcommand("fan", "Invariants of the toric surface of a fan");
  fan->add_option("--rays", rays_text, "rays as \"x,y;x,y;...\"")->required();
  fan->add_flag("--json", json_out);

  std::vector<std::string> weight_text;
  auto* wps = app.add_subcommand("wps", "Invariants of the weighted projective plane P(W0,W1,W2)");
  wps->add_option("weights", weight_text, "W0 W1 W2")->required()->expected(3);
  wps->add_flag("--json", json_out);

  std::string k_text = "5", m_text = "5", bound_text;
  auto* markov = app.add_subcommand("markov", "Markov-type equations x^2 + y^2 + k z^2 = m xyz");
  markov->require_subcommand(1);
  auto* markov_enum = markov->add_subcommand("enumerate", "Solutions with every coordinate <= bound");
  markov_enum->add_option("--k", k_text);
  markov_enum->add_option("--m", m_text);
  markov_enum->add_option("--bound", bound_text)->required();
  markov_enum->add_flag("--json", json_out);

  std::string record_path, partition_text, case_text;
  std::size_t point = 0;
  auto* deform_cmd = app.add_subcommand("deform", "Apply one Q-Gorenstein deformation step to a record");
  deform_cmd->add_option("--record", record_path, "record, surface report or fan JSON file")->required();
  deform_cmd->add_option("--point", point, "index into the record's singularities")->required();
  deform_cmd->add_option("--partition", partition_text, "d1,d2,...")->required();
  deform_cmd->add_option("--case", case_text)->required()->check(CLI::IsMember({"A", "B"}));
  deform_cmd->add_flag("--json", json_out);

  std::string triple_text;
  auto* example = app.add_subcommand("example7", "Deformations of P(a^2, b^2, 5c^2) for a^2 + b^2 + 5c^2 = 5abc");
  example->add_option("--triple", triple_text, "A,B,C")->required();
  example->add_flag("--json", json_out);

  CorpusConfig cfg;
  bool verify = false, no_del_pezzo = false, no_all_t = false;
  auto* corpus = app.add_subcommand("corpus", "Generate (and optionally verify) the toric corpus");
  corpus->add_option("--max-rays", cfg.max_rays)->capture_default_str();
  corpus->add_option("--coord-bound", cfg.coord_bound)->capture_default_str();
  corpus->add_option("--depth", cfg.deformation_depth)->capture_default_str();
  corpus->add_flag("--verify", verify);
  corpus->add_flag("--no-del-pezzo", no_del_pezzo, "keep fans whose -K is not ample");
  corpus->add_flag("--no-all-t", no_all_t, "keep fans with non-T points");
  corpus->add_flag("--json", json_out, "accepted for symmetry; corpus output is always JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (resolve->parsed()) {
      CyclicQuotSing s = normalize(integer_arg(r_text, "R"), integer_arg(a_text, "A"));
      HJChain chain = hj_expansion(s);
      if (json_out) {
        json j = germ_json(s);
        j["chain"] = chain_json(chain);
        j["gorenstein_index"] = integer_json(gorenstein_index(s));
        j["du_val"] = s.is_du_val();
        j["t"] = t_data(s).has_value();
        out << j.dump() << "\n";
      } else {
        out << "germ: 1/" << s.r() << "(1," << s.a() << ")\n"
            << "chain: " << chain_text(chain) << "\n"
            << "gorenstein index: " << gorenstein_index(s) << "\n";
      }
      return kExitOk;
    }

    if (tclass->parsed()) {
      CyclicQuotSing s = normalize(integer_arg(r_text, "R"), integer_arg(a_text, "A"));
      auto t = t_data(s);
      json j = {{"t", t.has_value()}};
      if (t) {
        j["d"] = integer_json(t->d);
        j["n"] = integer_json(t->n);
        j["aprime"] = integer_json(t->aprime);
        j["milnor"] = integer_json(milnor_number(SingularityClass(s)));
      }
      out << j.dump() << "\n";
      return kExitOk;
    }

    if (fan->parsed() || wps->parsed()) {
      Fan f = fan->parsed()
                  ? fan_from_rays(parse_rays(rays_text))
                  : wps_fan(integer_arg(weight_text[0], "W0"), integer_arg(weight_text[1], "W1"),
                            integer_arg(weight_text[2], "W2"));
      ToricSurface s(f);
      if (json_out) {
        out << surface_report_json(s).dump() << "\n";
      } else {
        print_surface(out, s);
      }
      auto defect = s.noether_defect();
      bool violated = s.del_pezzo() && defect && (*defect != 0 || s.s() > s.rho() + 2);
      return violated ? kExitViolation : kExitOk;
    }

    if (markov_enum->parsed()) {
      MarkovEquation eq(integer_arg(k_text, "k"), integer_arg(m_text, "m"));
      Integer bound = integer_arg(bound_text, "bound");
      if (bound < 1) throw Error(ErrorKind::InvalidInput, "bound must be positive");
      auto triples = enumerate(eq, bound);
      if (json_out) {
        json arr = json::array();
        for (const auto& t : triples) arr.push_back(triple_json(eq, t));
        out << arr.dump() << "\n";
      } else {
        for (const auto& t : triples) {
          out << t.a << " " << t.b << " " << t.c;
          try {
            auto w = triple_to_weights(eq, t);
            out << "  P(" << w[0] << "," << w[1] << "," << w[2] << ")";
          } catch (const Error&) {
          }
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (deform_cmd->parsed()) {
      std::ifstream in(record_path);
      if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + record_path);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, record_path + ": " + e.what());
      }
      SurfaceRecord rec = record_from_json(j);
      DeformationStep step{point, integer_list(partition_text, "partition part"),
                           case_text == "A" ? DeformationCase::A : DeformationCase::B};
      SurfaceRecord result = deform(rec, step);
      if (json_out) {
        out << record_json(result).dump() << "\n";
      } else {
        print_record(out, result);
      }
      bool sound = !rec.all_t() || rec.noether_defect() == result.noether_defect();
      return sound && bound_report(result).margin >= 0 ? kExitOk : kExitViolation;
    }

    if (example->parsed()) {
      auto abc = integer_list(triple_text, "triple entry");
      if (abc.size() != 3) throw Error(ErrorKind::InvalidInput, "--triple needs A,B,C");
      MarkovExample ex = markov_family_example({abc[0], abc[1], abc[2]});
      if (json_out) {
        out << example_json(ex).dump() << "\n";
      } else {
        out << "P(" << ex.weights[0] << "," << ex.weights[1] << "," << ex.weights[2] << ")  delta " << ex.delta
            << "  alpha " << ex.alpha << "  third point " << SingularityClass(ex.third_point).label() << "\n";
        out << "base: ";
        print_record(out, ex.base);
        for (std::size_t i = 0; i < ex.records.size(); ++i) {
          out << "partition (" << i + 1 << "," << 4 - i << "): ";
          print_record(out, ex.records[i]);
        }
      }
      if (ex.warning) err << "warning: a coordinate equals 1, so P(a^2,b^2,5c^2) has fewer than three singular points\n";
      bool sound = std::all_of(ex.records.begin(), ex.records.end(), record_sound);
      return sound ? kExitOk : kExitViolation;
    }

    if (corpus->parsed()) {
      cfg.require_del_pezzo = !no_del_pezzo;
      cfg.require_all_t = !no_all_t;
      validate(cfg);
      if (verify) {
        VerificationReport report = verify_corpus(cfg);
        out << report_json(report).dump() << "\n";
        return report.failed() == 0 ? kExitOk : kExitViolation;
      }
      bool sound = true;
      generate_corpus(cfg, [&](const CorpusItem& item) {
        json line = item.fan ? surface_report_json(ToricSurface(*item.fan)) : record_json(item.record);
        line["depth"] = item.depth;
        out << line.dump() << "\n";
        if (cfg.require_del_pezzo && item.record.all_t() && !record_sound(item.record)) sound = false;
      });
      return sound ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tdp::cli
