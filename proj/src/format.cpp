#include "qsc/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsc {

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition syntax: expected [a,b,...], got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("partition syntax: empty part");
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument("partition syntax: bad part '" + item + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational '" + text + "'");
    q.canonicalize();
    return q;
}

std::string complex_str(std::complex<double> z, int precision) {
    std::ostringstream out;
    out.precision(precision);
    out << z.real();
    out << (z.imag() < 0 ? "-" : "+");
    out << std::abs(z.imag()) << "i";
    return out.str();
}

std::string class_str(const CohClass& a) {
    if (a.terms.empty()) return "0";
    std::vector<std::pair<Partition, mpq_class>> terms(a.terms.begin(), a.terms.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        mpq_class abs = c < 0 ? mpq_class(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (abs != 1) out += rational_str(abs) + " ";
        out += "S" + lam.str();
    }
    return out;
}

nlohmann::json class_json(const CohClass& a) {
    nlohmann::json j;
    j["ctx"] = {{"k", a.ctx.k}, {"n", a.ctx.n}};
    j["terms"] = nlohmann::json::array();
    std::vector<std::pair<Partition, mpq_class>> terms(a.terms.begin(), a.terms.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    for (const auto& [lam, c] : terms)
        j["terms"].push_back({{"coeff", rational_str(c)}, {"partition", lam.parts()}});
    return j;
}

CohClass class_from_json(const nlohmann::json& j) {
    BoxContext ctx(j.at("ctx").at("k").get<int>(), j.at("ctx").at("n").get<int>());
    CohClass a(ctx);
    for (const auto& t : j.at("terms")) {
        Partition lam(t.at("partition").get<std::vector<int>>());
        a.add(lam, parse_rational(t.at("coeff").get<std::string>()));
    }
    return a;
}

nlohmann::json complex_json(std::complex<double> z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

}  // namespace qsc
