#pragma once

// Command-line front end. Every number printed comes from a library call.

#include <tennenbaum/tennenbaum.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace tennenbaum::cli {

enum ExitStatus : int { kOk = 0, kUsage = 2, kPrecondition = 3, kResource = 4 };

namespace detail {

inline std::size_t to_count(const Integer& v, const char* what) {
  if (v < 1 || v > Integer(std::numeric_limits<std::uint32_t>::max()))
    throw precondition_error(std::string(what) + " must be between 1 and 2^32-1");
  return static_cast<std::size_t>(v);
}


inline MapVariant parse_variant(const std::string& s) {
  if (s == "full") return MapVariant::Full;
  if (s == "halved") return MapVariant::Halved;
  throw std::invalid_argument("variant must be 'full' or 'halved', got '" + s + "'");
}

inline void print_prove(const Radicand& n, std::ostream& out) {
  const Certificate cert = prove_irrational(n);
  out << to_string(cert) << '\n';
  if (cert.witness) {
    for (const Candidate& c : find_exact(n, 3)) out << "  witness " << c << " defect " << defect(n, c) << '\n';
  }
}

inline void print_descend(const Radicand& n, const Candidate& start, const std::string& variant_flag,
                          const Integer& max_steps, std::ostream& out) {
  MapVariant variant;
  if (!variant_flag.empty()) {
    variant = parse_variant(variant_flag);
  } else {
    const VariantChoice choice = variant_for(n);
    if (const auto* u = std::get_if<Unsupported>(&choice))
      throw precondition_error("no descent map for n = " + to_string(n.value()) + ": " + u->reason +
                               " (pass --variant to force one)");
    variant = std::get<MapVariant>(choice);
  }
  const Orbit o = orbit(n, start, variant, to_count(max_steps, "max steps"));
  out << to_string(variant) << " descent for n = " << n.value() << " from " << start << '\n';
  for (std::size_t i = 0; i < o.steps.size(); ++i) {
    const DescentStep& s = o.steps[i];
    out << "step " << (i + 1) << ": " << s.before << " -> " << s.after << "  defect " << s.defect_before
        << " -> " << s.defect_after << '\n';
  }
  out << "stop at " << o.final_candidate(start) << " — " << to_string(o.stop) << '\n';
}

inline void print_limits(const Integer& n_max, std::ostream& out) {
  if (n_max < 2) throw precondition_error("limits requires n_max >= 2");
  out << std::left << std::setw(6) << "n" << std::setw(13) << "variant" << std::setw(10) << "n(n-4)"
      << std::setw(10) << "n(n-9)" << "note\n";
  for (Integer k = 2; k <= n_max; ++k) {
    const Radicand n = classify(k);
    const VariantChoice choice = variant_for(n);
    std::string name = "Unsupported";
    std::string note;
    if (const auto* v = std::get_if<MapVariant>(&choice))
      name = *v == MapVariant::Full ? "Full" : "Halved";
    else
      note = std::get<Unsupported>(choice).reason;
    out << std::setw(6) << to_string(k) << std::setw(13) << name << std::setw(10)
        << to_string(full_decrease_value(n)) << std::setw(10) << to_string(halved_decrease_value(n)) << note
        << '\n';
  }
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric infinite descent for sqrt(n): proofs, orbits, packings and figures", "tennenbaum"};
  app.require_subcommand(1);

  std::string n_arg, p_arg, q_arg, extra_arg, variant_arg, out_path, orientation_arg = "paper", scale_arg;
  std::string max_steps_arg = "100", defect_bound_arg;
  bool oracle = false, banner = false, no_labels = false, no_grid = false;

  auto* prove = app.add_subcommand("prove", "certify irrationality of sqrt(n) by descent");
  prove->add_option("n", n_arg, "radicand")->required();

  auto* descend = app.add_subcommand("descend", "iterate a descent map from (p,q)");
  descend->add_option("n", n_arg)->required();
  descend->add_option("p", p_arg)->required();
  descend->add_option("q", q_arg)->required();
  descend->add_option("--variant", variant_arg, "full | halved (default: the map that works for n)");
  descend->add_option("--max-steps", max_steps_arg, "step limit")->capture_default_str();

  auto* layout = app.add_subcommand("layout", "print the area ledger record of the diagonal packing");
  layout->add_option("n", n_arg)->required();
  layout->add_option("p", p_arg)->required();
  layout->add_option("q", q_arg)->required();
  layout->add_option("--out", out_path, "also write the record to this file");
  layout->add_flag("--oracle", oracle, "cross-check against the brute-force multiplicity grid");

  auto* render = app.add_subcommand("render", "write an SVG figure");
  render->add_option("n", n_arg)->required();
  render->add_option("p", p_arg)->required();
  render->add_option("q", q_arg)->required();
  render->add_option("-o,--out", out_path, "output SVG path")->required();
  render->add_option("--orientation", orientation_arg, "paper | canonical")->capture_default_str();
  render->add_option("--scale", scale_arg, "pixels per length unit (multiple of n-1)");
  render->add_flag("--banner", banner, "draw the area equation banner instead of the packing");
  render->add_flag("--no-labels", no_labels);
  render->add_flag("--no-grid", no_grid);

  auto* search = app.add_subcommand("search", "exhaustive search for exact solutions n q^2 = p^2");
  search->add_option("n", n_arg)->required();
  search->add_option("q_max", extra_arg)->required();
  search->add_option("--defect-bound", defect_bound_arg, "also list near-solutions with |defect| <= bound");

  auto* conv = app.add_subcommand("convergents", "continued-fraction convergents of sqrt(n)");
  conv->add_option("n", n_arg)->required();
  conv->add_option("count", extra_arg)->required();

  auto* limits = app.add_subcommand("limits", "tabulate which n the descent argument covers");
  limits->add_option("n_max", extra_arg)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*limits) {
      detail::print_limits(parse_integer(extra_arg), out);
      return kOk;
    }
    const Radicand n = classify(parse_integer(n_arg));
    if (*prove) {
      detail::print_prove(n, out);
    } else if (*descend) {
      const Integer max_steps = parse_integer(max_steps_arg);
      detail::print_descend(n, Candidate{parse_integer(p_arg), parse_integer(q_arg)}, variant_arg, max_steps,
                            out);
    } else if (*layout) {
      const FineLayout l = build_layout(n, Candidate{parse_integer(p_arg), parse_integer(q_arg)});
      const std::string record =
          to_record(area_ledger(l, oracle ? LedgerMode::WithOracle : LedgerMode::ClosedForm));
      out << record;
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << record)) throw std::runtime_error("cannot write " + out_path);
      }
    } else if (*render) {
      const Candidate c{parse_integer(p_arg), parse_integer(q_arg)};
      FigureStyle style;
      style.unit_scale = scale_arg.empty() ? default_unit_scale(n) : parse_integer(scale_arg);
      style.labels = !no_labels;
      style.corner_grid = !no_grid;
      SvgDocument doc;
      if (banner) {
        doc = render_equation_banner(n, c, style);
      } else {
        Orientation orientation;
        if (orientation_arg == "paper")
          orientation = Orientation::PaperReflected;
        else if (orientation_arg == "canonical")
          orientation = Orientation::Canonical;
        else
          throw std::invalid_argument("orientation must be 'paper' or 'canonical'");
        doc = render_layout(build_layout(n, c), style, orientation);
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << doc.text)) throw std::runtime_error("cannot write " + out_path);
      out << "wrote " << out_path << " (" << doc.width << "x" << doc.height << " px)\n";
    } else if (*search) {
      const Integer q_max = parse_integer(extra_arg);
      const auto exact = find_exact(n, q_max);
      if (exact.empty()) out << "none up to q_max = " << q_max << '\n';
      for (const Candidate& c : exact) out << c << '\n';
      if (!defect_bound_arg.empty()) {
        const auto near = near_solutions(n, q_max, parse_integer(defect_bound_arg));
        out << "near solutions (|defect| <= " << defect_bound_arg << "): " << near.size() << '\n';
        for (const NearSolution& s : near) out << "  " << s.candidate << " defect " << s.defect << '\n';
      }
    } else if (*conv) {
      for (const Candidate& c : convergents(n, detail::to_count(parse_integer(extra_arg), "count")))
        out << c << " defect " << defect(n, c) << '\n';
    }
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

}  // namespace tennenbaum::cli
