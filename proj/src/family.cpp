#include "iso/family.hpp"

#include <sstream>
#include <stdexcept>

namespace iso {

namespace {

FamilySpec make(FamilyKind kind, int param) {
    FamilySpec s;
    s.kind = kind;
    s.param = param;
    return s;
}

void require_param(int value, int minimum, const char* what) {
    if (value < minimum)
        throw std::invalid_argument(std::string(what) + " parameter must be >= " +
                                    std::to_string(minimum) + ", got " + std::to_string(value));
}

}  // namespace

FamilySpec family_single_vertex() { return make(FamilyKind::SingleVertex, 0); }

FamilySpec family_star(int k) {
    require_param(k, 1, "star");
    return make(FamilyKind::Star, k);
}

FamilySpec family_clique(int k) {
    require_param(k, 1, "clique");
    return make(FamilyKind::Clique, k);
}

FamilySpec family_cycle(int k) {
    require_param(k, 1, "cycle");
    return make(FamilyKind::CycleLen, k);
}

FamilySpec family_path(int k) {
    require_param(k, 1, "path");
    return make(FamilyKind::PathOrder, k);
}

FamilySpec family_all_cycles() { return make(FamilyKind::AllCycles, 0); }

FamilySpec family_regular_min(int r) {
    require_param(r, 0, "regmin");
    return make(FamilyKind::RegularMinDegree, r);
}

FamilySpec family_chromatic_min(int k) {
    require_param(k, 1, "chrmin");
    return make(FamilyKind::ChromaticMin, k);
}

FamilySpec family_union(std::vector<FamilySpec> members) {
    FamilySpec s;
    s.kind = FamilyKind::Union;
    for (FamilySpec& m : members) {
        if (m.kind == FamilyKind::Union)
            for (FamilySpec& inner : m.members) s.members.push_back(std::move(inner));
        else
            s.members.push_back(std::move(m));
    }
    if (s.members.empty()) throw std::invalid_argument("union must have at least one member");
    return s;
}

FamilySpec family_F0(int k) {
    require_param(k, 1, "F0");
    FamilySpec s = family_star(k);
    s.display = "F0:" + std::to_string(k);
    return s;
}

FamilySpec family_F1(int k) {
    require_param(k, 1, "F1");
    FamilySpec s = family_regular_min(k - 1);
    s.display = "F1:" + std::to_string(k);
    return s;
}

FamilySpec family_F2(int k) {
    require_param(k, 1, "F2");
    FamilySpec s = family_chromatic_min(k);
    s.display = "F2:" + std::to_string(k);
    return s;
}

FamilySpec family_F01(int k) {
    require_param(k, 1, "F01");
    FamilySpec s = family_union({family_star(k), family_regular_min(k - 1)});
    s.display = "F01:" + std::to_string(k);
    return s;
}

FamilySpec family_F3(int k) {
    require_param(k, 1, "F3");
    FamilySpec s =
        family_union({family_star(k), family_regular_min(k - 1), family_chromatic_min(k)});
    s.display = "F3:" + std::to_string(k);
    return s;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& text, const std::string& whole) {
    size_t pos = 0;
    int value;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter in '" + whole + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("bad family parameter in '" + whole + "'");
    return value;
}

FamilySpec parse_inner(const std::string& raw) {
    std::string text = strip(raw);
    if (text == "K1") return family_single_vertex();
    if (text == "cycles") return family_all_cycles();
    if (text.rfind("union(", 0) == 0) {
        if (text.back() != ')') throw std::invalid_argument("unterminated union in '" + raw + "'");
        std::string body = text.substr(6, text.size() - 7);
        std::vector<FamilySpec> members;
        int depth = 0;
        size_t start = 0;
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || (body[i] == ',' && depth == 0)) {
                members.push_back(parse_inner(body.substr(start, i - start)));
                start = i + 1;
            } else if (body[i] == '(') {
                ++depth;
            } else if (body[i] == ')') {
                if (--depth < 0) throw std::invalid_argument("unbalanced union in '" + raw + "'");
            }
        }
        if (depth != 0) throw std::invalid_argument("unbalanced union in '" + raw + "'");
        FamilySpec s = family_union(std::move(members));
        s.display = text;
        return s;
    }
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown family '" + text + "'");
    std::string head = text.substr(0, colon);
    int value = parse_int(text.substr(colon + 1), text);
    if (head == "star") return family_star(value);
    if (head == "clique") return family_clique(value);
    if (head == "cycle") return family_cycle(value);
    if (head == "path") return family_path(value);
    if (head == "regmin") return family_regular_min(value);
    if (head == "chrmin") return family_chromatic_min(value);
    if (head == "F0") return family_F0(value);
    if (head == "F1") return family_F1(value);
    if (head == "F2") return family_F2(value);
    if (head == "F3") return family_F3(value);
    if (head == "F01") return family_F01(value);
    throw std::invalid_argument("unknown family '" + text + "'");
}

}  // namespace

FamilySpec parse_family(const std::string& text) { return parse_inner(text); }

std::string family_to_string(const FamilySpec& spec) {
    if (!spec.display.empty()) return spec.display;
    switch (spec.kind) {
        case FamilyKind::SingleVertex: return "K1";
        case FamilyKind::Star: return "star:" + std::to_string(spec.param);
        case FamilyKind::Clique: return "clique:" + std::to_string(spec.param);
        case FamilyKind::CycleLen: return "cycle:" + std::to_string(spec.param);
        case FamilyKind::PathOrder: return "path:" + std::to_string(spec.param);
        case FamilyKind::AllCycles: return "cycles";
        case FamilyKind::RegularMinDegree: return "regmin:" + std::to_string(spec.param);
        case FamilyKind::ChromaticMin: return "chrmin:" + std::to_string(spec.param);
        case FamilyKind::Union: {
            std::ostringstream out;
            out << "union(";
            for (size_t i = 0; i < spec.members.size(); ++i) {
                if (i) out << ',';
                out << family_to_string(spec.members[i]);
            }
            out << ')';
            return out.str();
        }
    }
    throw std::logic_error("unreachable family kind");
}

}  // namespace iso
