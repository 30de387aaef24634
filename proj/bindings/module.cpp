// Python bindings for the main operations. Arbitrary-precision values cross
// the boundary as python ints (via decimal strings), partitions as lists.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newt/ehrhart.hpp"
#include "newt/errors.hpp"
#include "newt/hstar_formulas.hpp"
#include "newt/idp.hpp"
#include "newt/reflexivity.hpp"
#include "newt/symfun.hpp"

namespace py = pybind11;
using namespace newt;

namespace {

py::int_ to_pyint(const Int& v) {
  return py::cast<py::int_>(
      py::module_::import("builtins").attr("int")(to_decimal(v)));
}

Partition as_partition(const std::vector<int>& parts, int m) {
  return Partition::make(parts, m);
}

PolytopeHandle as_handle(const std::string& kind, const std::vector<int>& lam,
                         int m, int h) {
  if (kind == "schur") return PolytopeHandle::schur(as_partition(lam, m));
  if (kind == "grothendieck") {
    return PolytopeHandle::grothendieck(h, as_partition(lam, m));
  }
  throw validation_error("kind must be 'schur' or 'grothendieck'");
}

py::list hstar_list(const HStarVector& v) {
  py::list out;
  for (const Int& c : v.coeffs) out.append(to_pyint(c));
  return out;
}

py::dict hstar_dict(const HStarVector& v) {
  py::dict d;
  d["dim"] = v.dim;
  d["hstar"] = hstar_list(v);
  d["palindromic"] = is_palindromic(v);
  d["unimodal"] = is_unimodal(v);
  const auto g = gorenstein_index(v);
  d["gorenstein_index"] = g ? py::object(py::int_(*g)) : py::none();
  return d;
}

HStarVector vector_from_list(const std::vector<std::string>& coeffs, int dim) {
  HStarVector v;
  v.dim = dim;
  for (const auto& s : coeffs) v.coeffs.emplace_back(s);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Newton polytopes of Schur and inflated symmetric Grothendieck "
      "polynomials: exact lattice-point counts, Ehrhart h*-vectors, "
      "reflexivity, Gorenstein and integer-decomposition checks";

  py::register_exception<validation_error>(m, "ValidationError",
                                           PyExc_ValueError);
  py::register_exception<degenerate_error>(m, "DegenerateError",
                                           PyExc_ValueError);
  py::register_exception<limit_error>(m, "LimitError", PyExc_RuntimeError);

  m.def(
      "make_partition",
      [](const std::vector<int>& values, int m) {
        return as_partition(values, m).parts();
      },
      py::arg("values"), py::arg("m"),
      "Validate and zero-pad a weakly decreasing vector to length m.");

  m.def(
      "dominates",
      [](const std::vector<int>& mu, const std::vector<int>& lam) {
        return dominates(Partition::make(mu, static_cast<int>(mu.size())),
                         Partition::make(lam, static_cast<int>(lam.size())));
      },
      py::arg("mu"), py::arg("lam"));

  m.def(
      "reduce_by_translation",
      [](const std::vector<int>& lam, int m) {
        const auto [red, shift] = reduce_by_translation(as_partition(lam, m));
        return py::make_tuple(red.parts(), shift);
      },
      py::arg("lam"), py::arg("m"));

  m.def(
      "dominating_sequence",
      [](int h, const std::vector<int>& lam, int m) {
        const auto ds = dominating_sequence(h, as_partition(lam, m));
        py::dict d;
        py::list seq;
        for (const Partition& p : ds.seq) seq.append(p.parts());
        d["seq"] = seq;
        d["a"] = ds.row_boxes;
        d["b"] = ds.prefix_boxes;
        d["N"] = ds.steps();
        return d;
      },
      py::arg("h"), py::arg("lam"), py::arg("m"));

  m.def(
      "in_A",
      [](int h, const std::vector<int>& lam, const std::vector<int>& mu,
         int m) {
        return in_A(h, as_partition(lam, m), as_partition(mu, m));
      },
      py::arg("h"), py::arg("lam"), py::arg("mu"), py::arg("m"));

  m.def(
      "schur_expansion",
      [](const std::vector<int>& lam, int m) {
        py::dict d;
        for (const auto& [e, c] : schur_expansion(as_partition(lam, m)).terms()) {
          d[py::tuple(py::cast(e))] = to_pyint(c);
        }
        return d;
      },
      py::arg("lam"), py::arg("m"),
      "Exponent-vector -> coefficient dictionary of s_lambda.");

  m.def(
      "grothendieck_expansion",
      [](int h, const std::vector<int>& lam, int m) {
        py::dict d;
        for (const auto& [e, c] :
             grothendieck_expansion(h, as_partition(lam, m)).terms()) {
          d[py::tuple(py::cast(e))] = to_pyint(c);
        }
        return d;
      },
      py::arg("h"), py::arg("lam"), py::arg("m"));

  m.def(
      "skew_strict_fillings_count",
      [](int h, const std::vector<int>& lam, const std::vector<int>& mu,
         int m) {
        return to_pyint(
            skew_strict_fillings_count(h, as_partition(lam, m),
                                       as_partition(mu, m)));
      },
      py::arg("h"), py::arg("lam"), py::arg("mu"), py::arg("m"));

  m.def(
      "lattice_points",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        return handle.is_schur()
                   ? permutohedron::lattice_points(handle.lambda)
                   : grothendieck_polytope::lattice_points(handle.h,
                                                           handle.lambda);
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "count_lattice_points",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        return to_pyint(handle.is_schur()
                            ? permutohedron::count_lattice_points(handle.lambda)
                            : grothendieck_polytope::count_lattice_points(
                                  handle.h, handle.lambda));
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "vertices",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        return handle.is_schur()
                   ? permutohedron::vertices(handle.lambda)
                   : grothendieck_polytope::vertices(handle.h, handle.lambda);
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "contains",
      [](const std::string& kind, const std::vector<int>& lam, int m,
         const std::vector<int>& p, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        return handle.is_schur()
                   ? permutohedron::contains(handle.lambda, p)
                   : grothendieck_polytope::contains(handle.h, handle.lambda,
                                                     p);
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("p"),
      py::arg("h") = 1);

  m.def(
      "facets",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        const auto fs = handle.is_schur()
                            ? permutohedron::facets(handle.lambda)
                            : grothendieck_polytope::facets(handle.h,
                                                            handle.lambda);
        py::list out;
        for (const auto& f : fs) {
          py::dict d;
          d["coeffs"] = f.coeffs;
          d["bound"] = f.bound;
          d["sense"] = sense_str(f.sense);
          d["tag"] = f.tag;
          out.append(d);
        }
        return out;
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "count_dilate",
      [](const std::string& kind, const std::vector<int>& lam, int m,
         long long t, int h) {
        return to_pyint(count_dilate(as_handle(kind, lam, m, h), t));
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("t"),
      py::arg("h") = 1);

  m.def(
      "hstar",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        return hstar_dict(hstar(as_handle(kind, lam, m, h)));
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "ehrhart_polynomial",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto p = ehrhart_polynomial(as_handle(kind, lam, m, h));
        py::list out;
        for (const Rat& c : p.coeffs) {
          out.append(py::make_tuple(
              to_pyint(boost::multiprecision::numerator(c)),
              to_pyint(boost::multiprecision::denominator(c))));
        }
        return out;
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1,
      "Coefficients of the Ehrhart polynomial as (numerator, denominator) "
      "pairs, constant term first.");

  m.def(
      "is_reflexive",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto rep = is_reflexive_geometric(as_handle(kind, lam, m, h));
        py::dict d;
        d["verdict"] = verdict_str(rep.verdict);
        d["interior_points"] = rep.interior_points;
        py::list dists;
        for (const auto& [tag, dist] : rep.facet_distances) {
          dists.append(py::make_tuple(tag, dist));
        }
        d["facet_distances"] = dists;
        return d;
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);

  m.def(
      "schur_reflexive",
      [](const std::vector<int>& lam, int m) {
        const auto form = schur_reflexive_form(as_partition(lam, m));
        return py::make_tuple(form.has_value(),
                              form ? py::object(py::str(*form)) : py::none());
      },
      py::arg("lam"), py::arg("m"));

  m.def(
      "schur_gorenstein",
      [](const std::vector<int>& lam, int m) {
        const auto form = schur_gorenstein_form(as_partition(lam, m));
        return py::make_tuple(form.has_value(),
                              form ? py::object(py::str(*form)) : py::none());
      },
      py::arg("lam"), py::arg("m"));

  m.def(
      "grothendieck_reflexive",
      [](int h, const std::vector<int>& lam, int m) {
        const auto form = grothendieck_reflexive_form(h, as_partition(lam, m));
        return py::make_tuple(form.has_value(),
                              form ? py::object(py::str(*form)) : py::none());
      },
      py::arg("h"), py::arg("lam"), py::arg("m"));

  m.def(
      "hstar_single_row",
      [](int n) { return hstar_list(hstar_single_row(n)); }, py::arg("n"));
  m.def(
      "hstar_near_hook",
      [](int n) { return hstar_list(hstar_near_hook(n)); }, py::arg("n"));
  m.def(
      "hstar_two_row_family",
      [](int n) { return hstar_list(hstar_two_row_family(n)); }, py::arg("n"));
  m.def(
      "bounded_compositions",
      [](int n, long long k) { return to_pyint(bounded_compositions(n, k)); },
      py::arg("n"), py::arg("k"));

  m.def(
      "is_palindromic",
      [](const std::vector<std::string>& coeffs, int dim) {
        return is_palindromic(vector_from_list(coeffs, dim));
      },
      py::arg("coeffs"), py::arg("dim"));
  m.def(
      "is_unimodal",
      [](const std::vector<std::string>& coeffs, int dim) {
        return is_unimodal(vector_from_list(coeffs, dim));
      },
      py::arg("coeffs"), py::arg("dim"));
  m.def(
      "gorenstein_index",
      [](const std::vector<std::string>& coeffs, int dim) -> py::object {
        const auto g = gorenstein_index(vector_from_list(coeffs, dim));
        return g ? py::object(py::int_(*g)) : py::none();
      },
      py::arg("coeffs"), py::arg("dim"));

  m.def(
      "idp_brute",
      [](const std::string& kind, const std::vector<int>& lam, int m, int tmax,
         int h, long long max_points) {
        const auto r = idp_brute(as_handle(kind, lam, m, h), tmax, max_points);
        py::dict d;
        d["ok"] = r.ok;
        if (!r.ok) {
          d["t"] = r.t;
          d["counterexample"] = r.counterexample;
        }
        return d;
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("tmax") = 3,
      py::arg("h") = 1, py::arg("max_points") = 0);

  m.def(
      "decompose_schur",
      [](const std::vector<int>& lam, int m, int t, const std::vector<int>& p) {
        return decompose_schur(as_partition(lam, m), t, p);
      },
      py::arg("lam"), py::arg("m"), py::arg("t"), py::arg("p"));

  m.def(
      "decompose_grothendieck",
      [](int h, const std::vector<int>& lam, int m, int t,
         const std::vector<int>& p) {
        return decompose_grothendieck(h, as_partition(lam, m), t, p);
      },
      py::arg("h"), py::arg("lam"), py::arg("m"), py::arg("t"), py::arg("p"));

  m.def(
      "snp_check",
      [](const std::string& kind, const std::vector<int>& lam, int m, int h) {
        const auto handle = as_handle(kind, lam, m, h);
        const MonomialMap poly =
            handle.is_schur()
                ? schur_expansion(handle.lambda)
                : grothendieck_expansion(handle.h, handle.lambda);
        const auto pts =
            handle.is_schur()
                ? permutohedron::lattice_points(handle.lambda)
                : grothendieck_polytope::lattice_points(handle.h,
                                                        handle.lambda);
        auto member = [&](const std::vector<int>& p) {
          return handle.is_schur()
                     ? permutohedron::contains(handle.lambda, p)
                     : grothendieck_polytope::contains(handle.h, handle.lambda,
                                                       p);
        };
        return snp_check(poly, member, pts);
      },
      py::arg("kind"), py::arg("lam"), py::arg("m"), py::arg("h") = 1);
}
