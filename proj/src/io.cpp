#include "supercb/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace supercb {

namespace {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json((long long)v);
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

} // namespace

Json laurent_to_json(const Laurent& f) {
    Json j = Json::object();
    for (const auto& [e, c] : f.coeffs()) j[std::to_string(e)] = int_to_json(c);
    return j;
}

Laurent laurent_from_json(const Json& j) {
    Laurent f;
    if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        f.add_term(std::stoi(it.key()), int_from_json(it.value()));
    return f;
}

Json mat_to_json(const Mat& A) {
    Json rows = Json::array();
    const int N = A.shape().size();
    for (int i = 1; i <= N; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= N; ++j) row.push_back(A.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"m", A.shape().m}, {"n", A.shape().n}, {"rows", rows}};
}

Mat mat_from_json(const Json& j) {
    Shape sh{j.at("m").get<int>(), j.at("n").get<int>()};
    const int N = sh.size();
    Mat A(sh);
    const Json& rows = j.at("rows");
    if ((int)rows.size() != N) throw std::invalid_argument("row count mismatch");
    for (int i = 1; i <= N; ++i) {
        if ((int)rows[i - 1].size() != N) throw std::invalid_argument("column count mismatch");
        for (int k = 1; k <= N; ++k) A.at(i, k) = rows[i - 1][k - 1].get<int>();
    }
    return A;
}

Json element_to_json(const Element& x) {
    Json arr = Json::array();
    for (const auto& [A, c] : x.terms)
        arr.push_back(Json{{"matrix", mat_to_json(A)}, {"coefficient", laurent_to_json(c)}});
    return arr;
}

Element element_from_json(const Json& j, Shape sh, Side side) {
    Element x(sh, side);
    for (const Json& t : j)
        x.add_term(mat_from_json(t.at("matrix")), laurent_from_json(t.at("coefficient")));
    return x;
}

Json schur_to_json(const SchurElement& x) {
    Json arr = Json::array();
    for (const auto& [D, c] : x.terms)
        arr.push_back(Json{{"matrix", mat_to_json(D)}, {"coefficient", laurent_to_json(c)}});
    return Json{{"r", x.r}, {"terms", arr}};
}

SchurElement schur_from_json(const Json& j, Shape sh) {
    SchurElement x(sh, j.at("r").get<int>());
    for (const Json& t : j.at("terms"))
        x.add_term(mat_from_json(t.at("matrix")), laurent_from_json(t.at("coefficient")));
    return x;
}

Json record_to_json(const CanonicalRecord& rec) {
    Json j;
    j["target"] = mat_to_json(rec.target);
    j["side"] = rec.side == Side::plus ? "plus" : "minus";
    Json exp = Json::array();
    for (const auto& [B, c] : rec.expansion)
        exp.push_back(Json{{"matrix", mat_to_json(B)}, {"coefficient", laurent_to_json(c)}});
    j["expansion"] = std::move(exp);
    if (rec.witness) {
        Json w = Json::array();
        for (const auto& [B, c] : *rec.witness)
            w.push_back(Json{{"matrix", mat_to_json(B)}, {"coefficient", laurent_to_json(c)}});
        j["witness"] = std::move(w);
    }
    j["parity_events"] = rec.parity_events;
    return j;
}

CanonicalRecord record_from_json(const Json& j) {
    Mat target = mat_from_json(j.at("target"));
    CanonicalRecord rec;
    rec.target = target;
    rec.side = j.at("side").get<std::string>() == "minus" ? Side::minus : Side::plus;
    for (const Json& t : j.at("expansion"))
        rec.expansion.emplace(mat_from_json(t.at("matrix")), laurent_from_json(t.at("coefficient")));
    if (j.contains("witness")) {
        std::map<Mat, Laurent> w;
        for (const Json& t : j.at("witness"))
            w.emplace(mat_from_json(t.at("matrix")), laurent_from_json(t.at("coefficient")));
        rec.witness = std::move(w);
    }
    if (j.contains("parity_events")) rec.parity_events = j.at("parity_events").get<long>();
    return rec;
}

std::string laurent_to_latex(const Laurent& f) {
    if (f.is_zero()) return "0";
    // quantum integers print in bracket form
    for (int k = 2; k <= 64; ++k) {
        if (f == sym_int(k)) return "[" + std::to_string(k) + "]";
        if (f == -sym_int(k)) return "-[" + std::to_string(k) + "]";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        first = false;
        const int e = it->first;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "v";
            if (e != 1) out << "^{" << e << "}";
        }
    }
    return out.str();
}

std::string mat_to_latex(const Mat& A) {
    const int N = A.shape().size();
    std::ostringstream out;
    if (A.is_strictly_upper()) {
        out << "\\begin{smallmatrix}";
        for (int i = 1; i < N; ++i) {
            if (i > 1) out << "\\\\";
            for (int j = i + 1; j <= N; ++j) {
                if (j > i + 1) out << "&";
                out << A.at(i, j);
            }
        }
        out << "\\end{smallmatrix}";
    } else {
        out << "\\begin{pmatrix}";
        for (int i = 1; i <= N; ++i) {
            if (i > 1) out << "\\\\";
            for (int j = 1; j <= N; ++j) {
                if (j > 1) out << "&";
                out << A.at(i, j);
            }
        }
        out << "\\end{pmatrix}";
    }
    return out.str();
}

std::string record_to_latex(const CanonicalRecord& rec) {
    std::ostringstream out;
    out << "C = ";
    bool first = true;
    for (const auto& [B, c] : rec.expansion) {
        std::string cs = laurent_to_latex(c);
        if (!first) {
            if (!cs.empty() && cs[0] == '-') out << " - ", cs = cs.substr(1);
            else out << " + ";
        }
        first = false;
        if (cs == "1") {
            out << "\\left[" << mat_to_latex(B) << "\\right](0)";
        } else {
            const bool wrap = cs.find('+') != std::string::npos ||
                              cs.find('-', 1) != std::string::npos;
            if (wrap) out << "(" << cs << ")";
            else out << cs;
            out << "\\left[" << mat_to_latex(B) << "\\right](0)";
        }
    }
    return out.str();
}

namespace {

void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
}

long parse_int(const std::string& s, size_t& p) {
    skip_ws(s, p);
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit((unsigned char)s[p])) ++p;
    if (p == start || (p == start + 1 && !std::isdigit((unsigned char)s[start])))
        throw std::invalid_argument("expected integer at position " + std::to_string(start));
    return std::stol(s.substr(start, p - start));
}

void expect(const std::string& s, size_t& p, char c) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in matrix expression");
    ++p;
}

} // namespace

Mat parse_matrix(const std::string& text, Shape sh) {
    Mat A(sh);
    size_t p = 0;
    skip_ws(text, p);
    if (p == text.size()) return A;
    if (text[p] == '0' && [&] { size_t q = p + 1; skip_ws(text, q); return q == text.size(); }())
        return A;

    bool expect_term = true;
    while (p < text.size()) {
        skip_ws(text, p);
        if (p == text.size()) break;
        if (!expect_term) {
            expect(text, p, '+');
            skip_ws(text, p);
        }
        expect_term = false;

        long coeff = 1;
        if (std::isdigit((unsigned char)text[p])) coeff = parse_int(text, p);
        skip_ws(text, p);
        if (p < text.size() && (text[p] == 'E' || text[p] == 'e')) {
            ++p;
            expect(text, p, '[');
            long i = parse_int(text, p);
            expect(text, p, ',');
            long j = parse_int(text, p);
            expect(text, p, ']');
            if (i < 1 || j < 1 || i > sh.size() || j > sh.size() || i == j)
                throw std::invalid_argument("unit matrix index out of range");
            A.at((int)i, (int)j) += (int)coeff;
        } else if (p + 4 <= text.size() && text.compare(p, 4, "diag") == 0) {
            p += 4;
            expect(text, p, '(');
            for (int k = 1; k <= sh.size(); ++k) {
                long v = parse_int(text, p);
                A.at(k, k) += (int)(coeff * v);
                if (k < sh.size()) expect(text, p, ',');
            }
            expect(text, p, ')');
        } else {
            throw std::invalid_argument("unexpected token in matrix expression at position " +
                                        std::to_string(p));
        }
    }
    return A;
}

Comp parse_comp(const std::string& text, int expected_len) {
    Comp out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (expected_len >= 0 && (int)out.size() != expected_len)
        throw std::invalid_argument("expected " + std::to_string(expected_len) + " parts");
    return out;
}

} // namespace supercb
