#include "pellucas/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "pellucas/analysis.hpp"
#include "pellucas/errors.hpp"
#include "pellucas/evaluator.hpp"
#include "pellucas/exact/identities.hpp"
#include "pellucas/format.hpp"
#include "pellucas/sequence.hpp"
#include "pellucas/verify.hpp"

namespace pellucas::cli {

namespace {

// Raised for malformed flag values that CLI11 cannot see (e.g. --rect).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Rect kDefaultRect{-3.0, 0.5, 3.0, 3.5};
constexpr std::int64_t kDefaultGridCount = 12;

Rect parse_rect(const std::string& text) {
  double v[4];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 4; ++i) {
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) throw UsageError("--rect expects X0,Y0,X1,Y1, got '" + text + "'");
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw UsageError("--rect expects X0,Y0,X1,Y1, got '" + text + "'");
      ++p;
    }
  }
  if (p != end) throw UsageError("--rect expects X0,Y0,X1,Y1, got '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

std::string csv_complex(Complex c) {
  return format_double(c.real()) + "," + format_double(c.imag());
}

std::string eval_row(const ComplexPoint& z, const EvalResult& r) {
  return format_double(z.re()) + "," + format_double(z.im()) + "," +
         csv_complex(r.value) + "," + format_double(r.tail_bound) + "," +
         std::to_string(r.terms_used) + "," + csv_complex(r.minus_part) + "," +
         csv_complex(r.plus_part);
}

constexpr const char* kEvalHeader =
    "re,im,value_re,value_im,tail_bound,terms_used,minus_re,minus_im,plus_re,"
    "plus_im";

std::string coefficient_list(const exact::Polynomial& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

struct Options {
  std::int64_t from = 0, to = 0;
  double re = 0, im = 0;
  std::int64_t weight = 2;
  double tol = kDefaultTolerance;
  std::int64_t max_j = kDefaultMaxHalfWidth;
  std::string rect;
  std::int64_t nx = kDefaultGridCount, ny = kDefaultGridCount;
  std::int64_t jcap = kDefaultPoleIndexCap;
  std::string eq;
  std::int64_t k = 1;
  std::int64_t window = 2;
};

Rect rect_or_default(const Options& o) {
  return o.rect.empty() ? kDefaultRect : parse_rect(o.rect);
}

Equation equation_or_throw(const std::string& name) {
  auto eq = parse_equation(name);
  if (!eq)
    throw UsageError("--eq must be one of inversion|reflection|shift|negation, got '" +
                     name + "'");
  return *eq;
}

int cmd_seq(const Options& o, std::ostream& out) {
  out << "n,Q_n\n";
  const auto values = pell_lucas_range(o.from, o.to);
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (o.from + static_cast<std::int64_t>(i)) << ',' << values[i].get_str()
        << '\n';
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const ComplexPoint z(o.re, o.im);
  EvalSettings s;
  s.target_tol = o.tol;
  s.max_half_width = o.max_j;
  const Weight w(o.weight);
  s.validate();
  out << kEvalHeader << '\n';
  const EvalResult r = eval_series(z, w, s);
  out << eval_row(z, r) << '\n';
  return kExitOk;
}

int cmd_grid(const Options& o, std::ostream& out) {
  EvalSettings s;
  s.target_tol = o.tol;
  const Weight w(o.weight);
  s.validate();
  const Rect rect = rect_or_default(o);
  out << kEvalHeader << ",status\n";
  const auto entries = eval_grid(rect, o.nx, o.ny, w, s);
  for (const auto& e : entries) {
    if (const auto* r = std::get_if<EvalResult>(&e.outcome)) {
      out << eval_row(e.point, *r) << ",ok\n";
    } else {
      const auto& f = std::get<GridFailure>(e.outcome);
      out << format_double(e.point.re()) << ',' << format_double(e.point.im())
          << ",,,,,,,,,"
          << (f.kind == ErrorKind::PoleProximity ? "pole" : "diverged") << '\n';
    }
  }
  return kExitOk;
}

int cmd_poles(const Options& o, std::ostream& out) {
  const Rect rect = parse_rect(o.rect);
  if (o.jcap < 1) throw std::invalid_argument("--jcap must be >= 1");
  out << "j,location_num,location_den,location_float\n";
  const auto poles = poles_in_rect(rect, o.jcap);
  for (const auto& p : poles)
    out << p.index << ',' << p.location.get_num().get_str() << ','
        << p.location.get_den().get_str() << ',' << format_double(p.location_float)
        << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Equation eq = equation_or_throw(o.eq);
  EvalSettings s;
  s.target_tol = o.tol;
  s.validate();
  const Rect rect = rect_or_default(o);
  if (o.k < 1 || o.k > kMaxEquationK) throw std::invalid_argument("--k must be in [1, 8]");
  out << "re,im,status,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,"
         "lhs_tail,rhs_tail\n";
  const auto result = verify_grid(eq, rect, o.nx, o.ny, o.k, s);
  for (const auto& pt : result.points) {
    out << format_double(pt.point.re()) << ',' << format_double(pt.point.im());
    switch (pt.status) {
      case PointStatus::Ok: {
        const auto& r = *pt.report;
        out << ",ok," << csv_complex(r.lhs) << ',' << csv_complex(r.rhs) << ','
            << format_double(r.abs_residual) << ','
            << format_double(r.rel_residual) << ',' << format_double(r.lhs_tail)
            << ',' << format_double(r.rhs_tail) << '\n';
        break;
      }
      case PointStatus::Skipped: out << ",skipped,,,,,,,,\n"; break;
      case PointStatus::Failed: out << ",failed,,,,,,,,\n"; break;
    }
  }
  const auto& sum = result.summary;
  out << "# summary,equation=" << to_string(eq) << ",k=" << o.k
      << ",points_tested=" << sum.points_tested
      << ",points_skipped=" << sum.points_skipped
      << ",points_failed=" << sum.points_failed
      << ",max_rel_residual=" << format_double(sum.max_rel_residual);
  if (sum.worst_point)
    out << ",worst_re=" << format_double(sum.worst_point->re())
        << ",worst_im=" << format_double(sum.worst_point->im());
  out << '\n';
  if (sum.points_failed > 0) {
    out << "# error: " << sum.points_failed << " points failed to evaluate\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int cmd_prove(const Options& o, std::ostream& out) {
  const Equation eq = equation_or_throw(o.eq);
  const auto rep = exact::verify_identity_exact(eq, o.window, o.k);
  out << "equation: " << to_string(eq) << '\n'
      << "window: " << o.window << '\n'
      << "k: " << o.k << '\n'
      << "residual.numerator: " << coefficient_list(rep.residual.numerator()) << '\n'
      << "residual.denominator: " << coefficient_list(rep.residual.denominator()) << '\n'
      << "boundary_terms: " << rep.boundary.size() << '\n';
  for (const auto& b : rep.boundary)
    out << "boundary j=" << b.index << " sign=" << (b.sign > 0 ? "+" : "-")
        << " numerator: " << coefficient_list(b.value.numerator())
        << " denominator: " << coefficient_list(b.value.denominator()) << '\n';
  out << "residual_minus_boundary.numerator: "
      << coefficient_list(rep.residual_minus_boundary.numerator()) << '\n'
      << "verdict: " << exact::to_string(rep.verdict) << '\n';
  return rep.verdict == exact::ExactVerdict::NonZero ? kExitDomainError : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pell-Lucas numbers and Pell-Lucas-Eisenstein series", "pellucas"};
  app.require_subcommand(1, 1);
  Options o;

  auto* seq = app.add_subcommand("seq", "Pell-Lucas numbers Q_n for LO <= n <= HI");
  seq->add_option("--from", o.from, "first index")->required();
  seq->add_option("--to", o.to, "last index")->required();

  auto* eval = app.add_subcommand("eval", "evaluate the series at one point");
  eval->add_option("--re", o.re, "real part")->required();
  eval->add_option("--im", o.im, "imaginary part")->required();
  eval->add_option("--weight", o.weight, "integer weight m >= 2")->required();
  eval->add_option("--tol", o.tol, "target tail bound")->capture_default_str();
  eval->add_option("--max-j", o.max_j, "largest window half-width")->capture_default_str();

  auto* grid = app.add_subcommand("grid", "evaluate the series on a cell-centre lattice");
  grid->add_option("--rect", o.rect, "X0,Y0,X1,Y1")->required();
  grid->add_option("--nx", o.nx, "columns")->required();
  grid->add_option("--ny", o.ny, "rows")->required();
  grid->add_option("--weight", o.weight, "integer weight m >= 2")->required();
  grid->add_option("--tol", o.tol, "target tail bound")->capture_default_str();

  auto* poles = app.add_subcommand("poles", "poles inside a rectangle");
  poles->add_option("--rect", o.rect, "X0,Y0,X1,Y1")->required();
  poles->add_option("--jcap", o.jcap, "largest |j| enumerated")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "numeric functional-equation residuals on a grid");
  verify->add_option("--eq", o.eq, "inversion|reflection|shift|negation")->required();
  verify->add_option("--k", o.k, "weight is 2k")->required();
  verify->add_option("--rect", o.rect, "X0,Y0,X1,Y1 (default -3,0.5,3,3.5)");
  verify->add_option("--nx", o.nx, "columns")->capture_default_str();
  verify->add_option("--ny", o.ny, "rows")->capture_default_str();
  verify->add_option("--tol", o.tol, "target tail bound")->capture_default_str();

  auto* prove = app.add_subcommand("prove", "exact windowed identity check");
  prove->add_option("--eq", o.eq, "inversion|reflection|shift|negation")->required();
  prove->add_option("--window", o.window, "window half-width J >= 2")->required();
  prove->add_option("--k", o.k, "weight is 2k")->required();

  const auto usage = [&](const std::string& message) {
    err << "error: " << message << '\n';
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  };

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (seq->parsed()) return cmd_seq(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (grid->parsed()) return cmd_grid(o, out);
    if (poles->parsed()) return cmd_poles(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (prove->parsed()) return cmd_prove(o, out);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const Error& e) {
    out << "# error: " << e.what() << '\n';
    err << e.what() << '\n';
    return kExitDomainError;
  }
  return usage("no subcommand");
}

}  // namespace pellucas::cli
