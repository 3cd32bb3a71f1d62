#include "tate/io.hpp"

#include <cstdio>

namespace tate {

Json params_json(const Params& params) {
    Json j;
    j["p"] = params.p;
    j["f"] = params.f;
    j["m"] = params.m;
    j["k"] = params.k;
    j["e"] = params.e;
    j["q"] = params.q;
    return j;
}

Json coset_json(const Coset& c) {
    Json j;
    j["s"] = c.s;
    j["digits"] = c.digits;
    return j;
}

std::vector<std::string> coset_order_labels(const Params& params) {
    std::vector<std::string> out;
    for (const Coset& c : enumerate_cosets(params)) out.push_back(coset_to_string(c, params));
    return out;
}

Json matrix_json(const RationalMatrix& M, const Json& params, const std::vector<std::string>& order) {
    Json j;
    j["params"] = params;
    j["order"] = order;
    Json rows = Json::array();
    for (long i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (long jj = 0; jj < M.cols(); ++jj) row.push_back(rat_str(M.at(i, jj)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

std::string matrix_csv(const RationalMatrix& M, const std::vector<std::string>& order) {
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) out += ',';
        out += order[i];
    }
    out += '\n';
    for (long i = 0; i < M.rows(); ++i) {
        for (long j = 0; j < M.cols(); ++j) {
            if (j) out += ',';
            out += rat_str(M.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Json green_json(const GreenTable& table) {
    Json j;
    j["params"] = params_json(table.params);
    if (table.normalization == Normalization::MaxZero) {
        j["normalization"] = "max-zero";
    } else {
        j["normalization"] = "anchored";
        j["anchor"] = {table.anchor.first, table.anchor.second};
    }
    j["order"] = coset_order_labels(table.params);
    Json rows = Json::array();
    for (long i = 0; i < table.matrix.rows(); ++i) {
        Json row = Json::array();
        for (long jj = 0; jj < table.matrix.cols(); ++jj) row.push_back(rat_str(table.matrix.at(i, jj)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

std::string green_csv(const GreenTable& table) {
    const auto labels = coset_order_labels(table.params);
    std::string out = "row,col,value\n";
    for (long i = 0; i < table.matrix.rows(); ++i)
        for (long j = 0; j < table.matrix.cols(); ++j)
            out += labels[static_cast<size_t>(i)] + "," + labels[static_cast<size_t>(j)] + "," +
                   rat_str(table.matrix.at(i, j)) + "\n";
    return out;
}

Json bounded_json(const BoundedValue& v) {
    Json j;
    j["center"] = rat_str(v.center);
    j["radius"] = rat_str(v.radius);
    return j;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json spectrum_json(const Spectrum& s, const Params& params) {
    Json j;
    j["params"] = params_json(params);
    Json evs = Json::array();
    for (double e : s.eigenvalues) evs.push_back(format_double(e));
    j["eigenvalues"] = std::move(evs);
    j["kernel_dim"] = s.kernel_dim;
    return j;
}

}  // namespace tate
