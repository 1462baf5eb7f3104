#include "registry.hpp"

#include <fstream>
#include <sstream>

namespace hd {

std::vector<std::string> builtin_group_names() {
    std::vector<std::string> v;
    for (int k = 1; k <= 8; ++k) v.push_back("Z" + std::to_string(k));
    v.push_back("S3");
    v.push_back("D4");
    v.push_back("Q8");
    return v;
}

GroupTable builtin_group(const std::string& name) {
    if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '8')
        return cyclic_group(name[1] - '0');
    if (name == "S3") return s3_group();
    if (name == "D4") return d4_group();
    if (name == "Q8") return q8_group();
    throw ParseError("unknown builtin group: " + name);
}

std::vector<std::string> builtin_algebra_names() {
    std::vector<std::string> v;
    for (const char* pre : {"Q", "F"})
        for (const auto& g : builtin_group_names()) v.push_back(pre + g);
    return v;
}

HopfAlgebra builtin_algebra(const std::string& name, unsigned long mod) {
    std::string base = name;
    char kind = 'Q';
    if (!base.empty() && (base[0] == 'Q' || base[0] == 'F')) {
        // careful: "Q8" is a group name, "QQ8" its group algebra
        std::string rest = base.substr(1);
        bool rest_is_group = false;
        for (const auto& g : builtin_group_names())
            if (g == rest) rest_is_group = true;
        if (rest_is_group) {
            kind = base[0];
            base = rest;
        }
    }
    GroupTable G = builtin_group(base);
    std::string field = mod ? "F" + std::to_string(mod) : "Q";
    if (kind == 'Q') {
        HopfAlgebra H = group_algebra(G, mod, "Q" + base);
        if (mod) H.name = "Q" + base + "@" + field;
        return H;
    }
    HopfAlgebra H = dual(group_algebra(G, mod, "Q" + base));
    H.name = "F" + base + (mod ? "@" + field : "");
    return H;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

// split "a,b" at the single top-level comma
std::pair<std::string, std::string> split_pair(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0)
            return {s.substr(0, i), s.substr(i + 1)};
    }
    throw ParseError("sum(...) needs two comma-separated graph specs");
}

} // namespace

OGraph resolve_graph(const std::string& spec) {
    if (spec.rfind("lens:", 0) == 0) {
        int p = 0;
        try {
            size_t used = 0;
            p = std::stoi(spec.substr(5), &used);
            if (used != spec.size() - 5) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad lens spec: " + spec);
        }
        if (p < 1) throw ParseError("lens:p needs p >= 1");
        return lens(p);
    }
    if (spec.rfind("sum(", 0) == 0 && spec.back() == ')') {
        auto [a, b] = split_pair(spec.substr(4, spec.size() - 5));
        return connected_sum(resolve_graph(a), resolve_graph(b));
    }
    return parse_ograph(read_file(spec));
}

HopfAlgebra resolve_algebra(const std::string& spec, unsigned long mod) {
    std::string name = spec;
    if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
    for (const auto& b : builtin_algebra_names())
        if (b == name) return builtin_algebra(name, mod);
    for (const auto& g : builtin_group_names())
        if (g == name) return builtin_algebra(name, mod);
    if (spec.rfind("builtin:", 0) == 0)
        throw ParseError("unknown builtin algebra: " + name);
    return parse_hopf_json(read_file(spec));
}

} // namespace hd
