#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qcong/acceptance.hpp"
#include "qcong/congruence.hpp"
#include "qcong/counting.hpp"
#include "qcong/errors.hpp"
#include "qcong/identities.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/qfunctions.hpp"
#include "qcong/search.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const mpz_class& v) {
  const std::string s = v.get_str(10);
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list coefficients(const qcong::Series& s) {
  py::list out;
  for (std::size_t i = 0; i < s.order(); ++i) out.append(to_py(s.coefficient(i)));
  return out;
}

std::optional<qcong::Modulus> opt_mod(qcong::Modulus m) {
  if (m == 0) return std::nullopt;
  return m;
}

template <class T>
std::string dump_array(const std::vector<T>& items) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : items) arr.push_back(qcong::to_json(x));
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_qcong, m) {
  m.doc() = "Partition congruence engine (native part)";

  static py::exception<qcong::Error> base(m, "QcongError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qcong::Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def(
      "eta_quotient",
      [](const std::string& quotient, std::size_t order, qcong::Modulus modulus) {
        py::gil_scoped_release release;
        auto s = qcong::eta_quotient(qcong::EtaQuotient::parse(quotient), order, opt_mod(modulus));
        py::gil_scoped_acquire acquire;
        return coefficients(s);
      },
      py::arg("quotient"), py::arg("order"), py::arg("modulus") = 0);
  m.def(
      "rstar_series",
      [](unsigned ell, std::size_t order, qcong::Modulus modulus) {
        return coefficients(qcong::eta_quotient(qcong::rstar_quotient(ell), order, opt_mod(modulus)));
      },
      py::arg("ell"), py::arg("order"), py::arg("modulus") = 0);
  m.def(
      "euler_product",
      [](unsigned h, std::size_t order, qcong::Modulus modulus) {
        return coefficients(qcong::euler_product(h, order, opt_mod(modulus)));
      },
      py::arg("h"), py::arg("order"), py::arg("modulus") = 0);
  m.def(
      "phi", [](std::size_t order) { return coefficients(qcong::phi(order)); }, py::arg("order"));
  m.def(
      "psi", [](std::size_t order) { return coefficients(qcong::psi(order)); }, py::arg("order"));

  m.def(
      "count",
      [](const std::string& kind, unsigned ell, std::size_t upto) {
        const auto t = qcong::counting::count(qcong::counting::parse_kind(kind, ell), upto);
        py::list out;
        for (const auto& v : t.values) out.append(to_py(v));
        return out;
      },
      py::arg("kind"), py::arg("ell") = 0, py::arg("upto"));
  m.def(
      "enumerate_small",
      [](const std::string& kind, unsigned ell, std::size_t n) {
        std::vector<std::string> out;
        for (const auto& p : qcong::counting::enumerate_small(qcong::counting::parse_kind(kind, ell), n))
          out.push_back(qcong::counting::to_string(p));
        return out;
      },
      py::arg("kind"), py::arg("ell") = 0, py::arg("n"));

  m.def("legendre", &qcong::legendre, py::arg("a"), py::arg("p"));
  m.def("is_prime", &qcong::is_prime, py::arg("n"));
  m.def(
      "eligible_primes",
      [](const std::string& family, std::uint64_t bound) {
        return qcong::eligible_primes(qcong::family_from_name(family), bound);
      },
      py::arg("family"), py::arg("bound"));
  m.def("families", [] {
    std::vector<std::string> out;
    for (const auto f : qcong::all_families()) out.push_back(qcong::family_name(f));
    return out;
  });

  // The verification entry points return JSON text; the python package decodes it.
  m.def(
      "verify_identity_json",
      [](const std::string& tag, long p, long n, std::size_t order) {
        const auto id = qcong::identity_from_tag(tag);
        py::gil_scoped_release release;
        return qcong::to_json(qcong::verify_identity(id, {p, n}, order)).dump();
      },
      py::arg("tag"), py::arg("p") = 0, py::arg("n") = 0, py::arg("order") = 500);
  m.def(
      "verify_theorem_json",
      [](const std::string& selector, std::uint64_t p, unsigned alpha, unsigned k, unsigned ell,
         qcong::Modulus modulus, bool over_two, bool dissection_sign, std::size_t terms,
         std::size_t max_order) {
        std::vector<std::pair<qcong::CongruenceClaim, std::size_t>> claims;
        for (const auto f : qcong::families_matching(selector)) {
          qcong::FamilyParams params;
          params.p = p;
          params.alpha = alpha;
          params.k = k;
          params.ell = ell;
          params.modulus = modulus;
          params.offset_variant = over_two ? qcong::OffsetVariant::over_two : qcong::OffsetVariant::statement;
          params.rhs_sign = dissection_sign ? qcong::RhsSign::dissection : qcong::RhsSign::statement;
          if (params.p == 0) {
            try {
              params.p = qcong::eligible_primes(f, 100).front();
            } catch (const qcong::ArgumentError&) {
            }
          }
          for (auto& c : qcong::instantiate(f, params)) claims.emplace_back(std::move(c), terms);
        }
        qcong::VerifyOptions opts;
        opts.max_order = max_order;
        py::gil_scoped_release release;
        return dump_array(qcong::verify_batch(claims, opts));
      },
      py::arg("family"), py::arg("p") = 0, py::arg("alpha") = 0, py::arg("k") = 1,
      py::arg("ell") = 0, py::arg("modulus") = 0, py::arg("over_two") = false,
      py::arg("dissection_sign") = false, py::arg("terms") = 500, py::arg("max_order") = 200000);
  m.def(
      "verify_intermediate_json",
      [](const std::string& name, std::size_t terms) {
        std::vector<qcong::IntermediateId> ids;
        if (name == "all") {
          ids = qcong::all_intermediates();
        } else {
          ids.push_back(qcong::intermediate_from_name(name));
        }
        py::gil_scoped_release release;
        qcong::SeriesCache cache;
        qcong::VerifyOptions opts;
        opts.cache = &cache;
        std::vector<qcong::VerificationReport> out;
        for (const auto id : ids) out.push_back(qcong::verify_intermediate(id, terms, opts));
        return dump_array(out);
      },
      py::arg("name") = "all", py::arg("terms") = 500);
  m.def(
      "run_acceptance_json",
      [](const std::vector<int>& selection) {
        py::gil_scoped_release release;
        return dump_array(qcong::run_acceptance(selection));
      },
      py::arg("criteria") = std::vector<int>{});
  m.def(
      "search_json",
      [](unsigned ell, std::size_t max_step, qcong::Modulus max_modulus, std::size_t order,
         std::size_t min_support) {
        qcong::SearchOptions o;
        o.ell = ell;
        o.max_step = max_step;
        o.max_modulus = max_modulus;
        o.order = order;
        o.min_support = min_support;
        py::gil_scoped_release release;
        return dump_array(qcong::search(o));
      },
      py::arg("ell"), py::arg("max_step") = 4, py::arg("max_modulus") = 4, py::arg("order") = 500,
      py::arg("min_support") = 50);
}
