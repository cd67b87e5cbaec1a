#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectcount/binomial.hpp"
#include "rectcount/counting.hpp"
#include "rectcount/identities.hpp"
#include "rectcount/matrix.hpp"
#include "rectcount/subset_lattice.hpp"
#include "rectcount/verifier.hpp"

namespace py = pybind11;
using namespace rectcount;

namespace {

py::object to_pyint(const ExactInt& v) {
    PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (p == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

ExactInt from_pyint(py::handle h) { return ExactInt(py::str(h).cast<std::string>()); }

RectMatrix matrix_from(const std::vector<std::vector<std::int32_t>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows.front().size() : 0;
    RectMatrix a(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        if (rows[r].size() != n) throw std::invalid_argument("matrix rows have unequal lengths");
        for (std::size_t c = 0; c < n; ++c) a.set(r, c, Symbol{rows[r][c]});
    }
    return a;
}

ColumnPattern pattern_from(const std::vector<std::int32_t>& tokens) {
    ColumnPattern p;
    p.entries.reserve(tokens.size());
    for (std::int32_t t : tokens) p.entries.push_back(Symbol{t});
    return p;
}

RowSubset subset_from(const std::vector<int>& rows) {
    RowSubset s;
    for (int i : rows) {
        if (i < 0 || i >= RowSubset::max_rows) throw std::invalid_argument("row index out of range");
        s.bits |= 1u << i;
    }
    return s;
}

std::uint32_t mask_from(const std::vector<int>& elems) {
    std::uint32_t mask = 0;
    for (int e : elems) {
        if (e < 0 || e >= 32) throw std::invalid_argument("element out of range");
        mask |= 1u << e;
    }
    return mask;
}

IdentityId id_from(const std::string& name) {
    const auto id = identity_by_name(name);
    if (!id) throw std::invalid_argument("unknown identity '" + name + "'");
    return *id;
}

std::vector<long long> params_from(IdentityId id, const py::dict& params) {
    const auto& sig = signature(id);
    if (params.size() != sig.params.size())
        throw std::invalid_argument(std::string(sig.name) + ": expected parameters " +
                                    [&] {
                                        std::string s;
                                        for (auto p : sig.params) s += std::string(p) + " ";
                                        return s;
                                    }());
    std::vector<long long> out;
    out.reserve(sig.params.size());
    for (const auto name : sig.params)
        out.push_back(params[py::str(std::string(name))].cast<long long>());
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["grid"] = r.grid;
    d["tuples_checked"] = r.tuples_checked;
    d["status"] = std::string(r.status());
    d["seed"] = r.seed ? py::cast(*r.seed) : py::object(py::none());
    d["wall_time_ms"] = r.wall_time_ms;
    py::list failures;
    for (const Failure& f : r.failures) {
        py::dict fd;
        py::dict params;
        for (const auto& [name, value] : f.params) params[py::str(name)] = value;
        fd["params"] = params;
        fd["lhs"] = to_pyint(ExactInt(f.lhs));
        fd["rhs"] = to_pyint(ExactInt(f.rhs));
        fd["detail"] = f.detail;
        failures.append(fd);
    }
    d["failures"] = failures;
    return d;
}

ParamGrid grid_from(IdentityId id, const py::object& grid) {
    auto boxes = default_boxes(id);
    if (!grid.is_none()) {
        for (const auto item : grid.cast<py::dict>()) {
            const auto name = item.first.cast<std::string>();
            bool known = false;
            for (auto& box : boxes) {
                if (box.name == name) {
                    const auto range = item.second.cast<std::pair<long long, long long>>();
                    box.lo = range.first;
                    box.hi = range.second;
                    known = true;
                    break;
                }
            }
            if (!known) throw std::invalid_argument("'" + name + "' is not a parameter of this identity");
        }
    }
    return grid_for(id, std::move(boxes));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact i-column counting and binomial identity verification";
    m.attr("__version__") = "0.1.0";

    m.def(
        "count_direct",
        [](const std::vector<std::vector<std::int32_t>>& matrix, const std::vector<std::int32_t>& pattern) {
            return count_direct(matrix_from(matrix), pattern_from(pattern));
        },
        py::arg("matrix"), py::arg("pattern"),
        "Number of columns equal to the pattern, by direct scan.");

    m.def(
        "count_inclusion_exclusion",
        [](const std::vector<std::vector<std::int32_t>>& matrix, const std::vector<std::int32_t>& pattern) {
            return count_inclusion_exclusion(matrix_from(matrix), pattern_from(pattern));
        },
        py::arg("matrix"), py::arg("pattern"),
        "Number of columns equal to the pattern, as the alternating sum over row subsets.");

    m.def(
        "mismatch_count",
        [](const std::vector<std::vector<std::int32_t>>& matrix, const std::vector<std::int32_t>& pattern,
           const std::vector<int>& rows) {
            return mismatch_count(matrix_from(matrix), pattern_from(pattern), subset_from(rows));
        },
        py::arg("matrix"), py::arg("pattern"), py::arg("rows"),
        "Number of columns differing from the pattern on every listed row; n for rows=[].");

    m.def(
        "count_uniform",
        [](const py::sequence& values, int rows) {
            std::vector<ExactInt> a;
            a.reserve(py::len(values));
            for (const auto v : values) a.push_back(from_pyint(v));
            return to_pyint(count_uniform(a, rows));
        },
        py::arg("values"), py::arg("rows"),
        "Alternating sum when A(I) depends only on |I|: values[i] = A(i), i = 0..rows.");

    m.def(
        "count_binary_bivariate",
        [](const py::sequence& table, int k, int rows) {
            std::vector<std::vector<ExactInt>> a;
            for (const auto row : table) {
                auto& out = a.emplace_back();
                for (const auto v : row.cast<py::sequence>()) out.push_back(from_pyint(v));
            }
            return to_pyint(count_binary_bivariate(a, k, rows));
        },
        py::arg("table"), py::arg("k"), py::arg("rows"),
        "Bivariate alternating sum: table[i1][i2] = A(i1, i2).");

    m.def(
        "binom", [](long long n, long long r) { return to_pyint(binom(n, r)); }, py::arg("n"),
        py::arg("r"), "Exact C(n, r); 0 outside 0 <= r <= n.");

    m.def(
        "bernoulli_row",
        [](long long n, long long upto) {
            py::list out;
            for (const ExactInt& v : bernoulli_row(n, upto)) out.append(to_pyint(v));
            return out;
        },
        py::arg("n"), py::arg("upto"), "Partial sums of row n of Pascal's triangle, m = 0..upto.");

    m.def("identity_names", [] {
        py::list names;
        for (const auto& sig : identity_signatures()) names.append(std::string(sig.name));
        return names;
    });

    m.def(
        "identity_params",
        [](const std::string& name) {
            py::list out;
            for (const auto p : signature(id_from(name)).params) out.append(std::string(p));
            return out;
        },
        py::arg("name"));

    m.def(
        "eval_identity",
        [](const std::string& name, const py::dict& params) {
            const auto id = id_from(name);
            const auto p = params_from(id, params);
            const auto r = eval_identity(id, p);
            return py::make_tuple(to_pyint(r.lhs), to_pyint(r.rhs));
        },
        py::arg("name"), py::arg("params"),
        "Evaluate both sides exactly; returns (lhs, rhs).");

    m.def(
        "build_incidence",
        [](int n) {
            const auto inc = build_incidence(n);
            py::list rows;
            for (std::size_t r = 0; r < inc.matrix.rows(); ++r) {
                py::list row;
                for (std::size_t c = 0; c < inc.matrix.cols(); ++c)
                    row.append(inc.matrix.at(r, c).token);
                rows.append(row);
            }
            return rows;
        },
        py::arg("n"), "The n x 2^n subset-incidence matrix: bit i of the column label.");

    m.def(
        "count_subsets_brute",
        [](int n, const std::vector<int>& contain, const std::vector<int>& avoid, int size_min,
           int size_max) {
            return count_subsets_brute({n, mask_from(contain), mask_from(avoid), size_min, size_max});
        },
        py::arg("n"), py::arg("contain"), py::arg("avoid"), py::arg("size_min"), py::arg("size_max"));

    m.def(
        "count_subsets_formula",
        [](int n, const std::vector<int>& contain, const std::vector<int>& avoid, int size_min,
           int size_max) {
            return count_subsets_formula({n, mask_from(contain), mask_from(avoid), size_min, size_max});
        },
        py::arg("n"), py::arg("contain"), py::arg("avoid"), py::arg("size_min"), py::arg("size_max"));

    m.def(
        "theorem_input_table",
        [](int n, int k, int l, int m1, int m2) {
            py::list rows;
            for (const auto& row : theorem_input_table(n, k, l, m1, m2)) {
                py::list out;
                for (const ExactInt& v : row) out.append(to_pyint(v));
                rows.append(out);
            }
            return rows;
        },
        py::arg("n"), py::arg("k"), py::arg("l"), py::arg("m1"), py::arg("m2"));

    m.def(
        "verify_identity",
        [](const std::string& name, const py::object& grid) {
            const auto id = id_from(name);
            return report_dict(verify_identity(id, grid_from(id, grid)));
        },
        py::arg("name"), py::arg("grid") = py::none(),
        "Sweep an identity over its default grid, or over {param: (lo, hi)} overrides.");

    m.def(
        "verify_counting",
        [](int samples, std::uint64_t seed) {
            CountingCheckOptions opts;
            opts.random_samples = samples;
            opts.seed = seed;
            return report_dict(verify_counting(opts));
        },
        py::arg("samples") = 1000, py::arg("seed") = default_seed);

    m.def(
        "verify_pipeline", [](int n_max) { return report_dict(verify_pipeline(n_max)); },
        py::arg("n_max") = 10);
}
