#include "erlangen/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

std::string describe(const Element& e) {
  std::ostringstream out;
  if (const auto* p = std::get_if<ProjPoint>(&e)) {
    out << "point (" << format_vector(p->coords()) << ")";
  } else if (const auto* h = std::get_if<Hyperplane>(&e)) {
    out << "hyperplane (" << format_vector(h->coeffs()) << ")";
  } else {
    const Matrix& m = std::get<Quadric>(e).matrix();
    out << "quadric [";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      out << (r ? "; " : "") << format_vector(m.row(r).transpose());
    }
    out << "]";
  }
  return out.str();
}

std::string describe(const PropertyValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return format_scalar(std::get<Scalar>(v));
}

std::string describe(const Transformation& t) {
  std::ostringstream out;
  const MapVariant& f = t.forward();
  auto matrix = [&](const Matrix& m) {
    out << "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      out << (r ? "; " : "") << format_vector(m.row(r).transpose());
    }
    out << "]";
  };
  if (const auto* p = std::get_if<ProjMap>(&f)) {
    out << "projective ";
    matrix(p->matrix());
  } else if (const auto* m = std::get_if<MoebiusMap>(&f)) {
    out << "moebius " << (m->conjugating() ? "conjugating " : "");
    matrix(Matrix(m->matrix()));
  } else if (const auto* c = std::get_if<CircleMap>(&f)) {
    out << "circle ";
    matrix(c->map.matrix());
  } else {
    out << "contact map";
  }
  return out.str();
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ptr);
  const auto e = s.find('e');
  if (e != std::string::npos) {
    std::string mantissa = s.substr(0, e);
    std::string exponent = s.substr(e + 1);
    bool negative = false;
    if (!exponent.empty() && (exponent[0] == '-' || exponent[0] == '+')) {
      negative = exponent[0] == '-';
      exponent.erase(0, 1);
    }
    const auto nz = exponent.find_first_not_of('0');
    exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
    s = mantissa + "e" + (negative ? "-" : "") + exponent;
  }
  return s;
}

std::string format_scalar(Scalar z) {
  if (z.imag() == 0.0) return format_number(z.real());
  const std::string im = format_number(std::abs(z.imag()));
  return format_number(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(v[i]);
  }
  return out;
}

std::string serialize_report(const Verdict& v) {
  std::ostringstream out;
  out << "invariance test\n";
  out << "  property: " << v.property << "\n";
  out << "  group: " << v.group << "\n";
  out << "  trials requested: " << v.trials << "\n";
  out << "  trials executed: " << v.executed << "\n";
  out << "  trials undefined: " << v.undefined << "\n";
  out << "  tolerance: " << format_number(v.tolerance) << "\n";
  if (v.invariant) {
    out << "  verdict: invariant (no counterexample found; statistical, "
           "not a proof)\n";
    out << "RESULT: invariant trials=" << v.executed
        << " tol=" << format_number(v.tolerance) << "\n";
    return out.str();
  }
  const Witness& w = *v.witness;
  out << "  verdict: violated\n";
  out << "  witness seed: " << w.seed << "\n";
  out << "  witness value before: " << describe(w.before) << "\n";
  out << "  witness value after: " << describe(w.after) << "\n";
  out << "  witness transformation: " << describe(w.transformation) << "\n";
  for (const Element& e : w.config.elements()) {
    out << "  witness element: " << describe(e) << "\n";
  }
  out << "RESULT: violated trials=" << v.executed
      << " tol=" << format_number(v.tolerance) << " witness_seed=" << w.seed
      << "\n";
  return out.str();
}

std::string serialize_report(const AxiomReport& r) {
  std::ostringstream out;
  out << "group axioms\n";
  out << "  group: " << r.group << "\n";
  out << "  trials: " << r.trials << "\n";
  out << "  tolerance: " << format_number(r.tolerance) << "\n";
  out << "  closure failures: " << r.closure_failures << "\n";
  out << "  inverse failures: " << r.inverse_failures << "\n";
  out << "  identity failures: " << r.identity_failures << "\n";
  for (const AxiomFailure& f : r.failures) {
    const char* kind = f.check == AxiomCheck::Closure   ? "closure"
                       : f.check == AxiomCheck::Inverse ? "inverse"
                                                        : "identity";
    out << "  failure: " << kind << " trial=" << f.trial << " seed=" << f.seed
        << "\n";
  }
  out << "RESULT: " << (r.ok() ? "axioms-ok" : "axioms-failed")
      << " trials=" << r.trials << " tol=" << format_number(r.tolerance)
      << " closure_failures=" << r.closure_failures
      << " inverse_failures=" << r.inverse_failures
      << " identity_failures=" << r.identity_failures;
  if (!r.failures.empty()) {
    out << " first_failure_seed=" << r.failures.front().seed;
  }
  out << "\n";
  return out.str();
}

std::string serialize_report(const ContactVerdict& v) {
  std::ostringstream out;
  out << "contact check\n";
  out << "  samples: " << v.samples << "\n";
  out << "  skipped: " << v.skipped << "\n";
  out << "  tolerance: " << format_number(v.tolerance) << "\n";
  out << "  max alignment residual: " << format_number(v.max_residual) << "\n";
  out << "  factor range: [" << format_number(v.min_factor) << ", "
      << format_number(v.max_factor) << "]\n";
  if (v.witness) {
    Vector e(static_cast<Eigen::Index>(v.witness->element.size()));
    for (std::size_t i = 0; i < v.witness->element.size(); ++i) {
      e[static_cast<Eigen::Index>(i)] = v.witness->element[i];
    }
    out << "  witness element: (" << format_vector(e) << ")\n";
    out << "  witness residual: " << format_number(v.witness->residual) << "\n";
    out << "  witness seed: " << v.witness->seed << "\n";
  }
  out << "RESULT: " << (v.contact ? "contact" : "not-contact")
      << " samples=" << v.samples << " tol=" << format_number(v.tolerance)
      << " max_residual=" << format_number(v.max_residual);
  if (v.witness) out << " witness_seed=" << v.witness->seed;
  out << "\n";
  return out.str();
}

std::string serialize_report(const ValueReport& r) {
  std::ostringstream out;
  out << r.title << "\n";
  for (const auto& [key, value] : r.fields) {
    out << "  " << key << ": " << value << "\n";
  }
  out << "RESULT: ok";
  for (const auto& [key, value] : r.fields) {
    if (value.find(' ') == std::string::npos) out << " " << key << "=" << value;
  }
  out << "\n";
  return out.str();
}

std::optional<std::string> Trailer::get(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Trailer parse_trailer(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (line.rfind("RESULT:", 0) == 0) last = line;
  }
  if (last.empty()) throw PreconditionError("no RESULT: line");
  std::istringstream words(last.substr(7));
  Trailer t;
  if (!(words >> t.verdict)) throw PreconditionError("RESULT: without verdict");
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw PreconditionError("malformed trailer field: " + word);
    }
    t.fields.emplace_back(word.substr(0, eq), word.substr(eq + 1));
  }
  return t;
}

}  // namespace erlangen
