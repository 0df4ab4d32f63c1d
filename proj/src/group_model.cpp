#include "gauge5/group_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gauge5::rational {

namespace {

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
            throw std::invalid_argument("bad degree '" + item + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

RationalGroupModel::RationalGroupModel(std::vector<int> ext, std::vector<int> poly)
    : exterior(std::move(ext)), polynomial(std::move(poly)) {
    for (int d : exterior)
        if (d < 3 || d % 2 == 0) throw std::invalid_argument("exterior degrees must be odd and >= 3");
    for (int d : polynomial)
        if (d < 2 || d % 2 != 0) throw std::invalid_argument("polynomial degrees must be even and >= 2");
    std::sort(exterior.begin(), exterior.end());
    std::sort(polynomial.begin(), polynomial.end());
}

RationalGroupModel RationalGroupModel::of(const lie::LieGroupSpec& g) { return {lie::rational_degrees(g), {}}; }

int RationalGroupModel::rank_pi(int d) const {
    return static_cast<int>(std::count(exterior.begin(), exterior.end(), d) +
                            std::count(polynomial.begin(), polynomial.end(), d));
}

int RationalGroupModel::max_degree() const {
    int m = 0;
    if (!exterior.empty()) m = std::max(m, exterior.back());
    if (!polynomial.empty()) m = std::max(m, polynomial.back());
    return m;
}

std::string RationalGroupModel::serialize() const {
    return "exterior=" + join(exterior) + ";polynomial=" + join(polynomial);
}

RationalGroupModel RationalGroupModel::parse(std::string_view text) {
    std::string s(text);
    std::vector<int> ext;
    std::vector<int> poly;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=list in group model, got '" + field + "'");
        std::string key = field.substr(0, eq);
        key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
        if (key == "exterior")
            ext = parse_list(field.substr(eq + 1));
        else if (key == "polynomial")
            poly = parse_list(field.substr(eq + 1));
        else
            throw std::invalid_argument("unknown group model key '" + key + "'");
    }
    return {ext, poly};
}

}  // namespace gauge5::rational
