// CSV reader and a minimal XML well-formedness checker for output tests.

#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace refcons::testing {

struct CsvRow {
    int n = 0;
    int mu = 0;
    std::optional<double> fidelity;
    double asymmetry_bits = 0.0;
    double normalized_asymmetry = 0.0;
    double reference_entropy_bits = 0.0;
};

struct CsvTable {
    std::string header;
    std::vector<CsvRow> rows;
};

inline std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cell);
            cell.clear();
        } else {
            cell += c;
        }
    }
    out.push_back(cell);
    return out;
}

inline CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::getline(in, t.header);
    std::string line;
    while (std::getline(in, line)) {
        const auto cells = split_commas(line);
        if (cells.size() != 6) {
            throw std::runtime_error("bad CSV row: " + line);
        }
        CsvRow r;
        r.n = std::stoi(cells[0]);
        r.mu = std::stoi(cells[1]);
        if (!cells[2].empty()) {
            r.fidelity = std::stod(cells[2]);
        }
        r.asymmetry_bits = std::stod(cells[3]);
        r.normalized_asymmetry = std::stod(cells[4]);
        r.reference_entropy_bits = std::stod(cells[5]);
        t.rows.push_back(r);
    }
    return t;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

/// Tag balance and attribute quoting; enough to catch broken emitters.
inline bool xml_well_formed(const std::string& s, std::string* error = nullptr) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    const auto fail = [&](const std::string& why) {
        if (error) *error = why + " at offset " + std::to_string(i);
        return false;
    };
    while (i < s.size()) {
        if (s[i] != '<') {
            if (s[i] == '&') {
                const auto semi = s.find(';', i);
                if (semi == std::string::npos || semi - i > 8) return fail("bad entity");
            }
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) {
                return fail("text outside root");
            }
            ++i;
            continue;
        }
        const auto close = s.find('>', i);
        if (close == std::string::npos) return fail("unterminated tag");
        std::string tag = s.substr(i + 1, close - i - 1);
        if (tag.starts_with("?")) {
            if (!tag.ends_with("?")) return fail("bad declaration");
        } else if (tag.starts_with("/")) {
            if (stack.empty() || stack.back() != tag.substr(1)) return fail("mismatched </" + tag.substr(1) + ">");
            stack.pop_back();
        } else {
            const bool self_closing = tag.ends_with("/");
            if (self_closing) tag.pop_back();
            std::size_t quotes = 0;
            for (char c : tag) quotes += (c == '"');
            if (quotes % 2 != 0) return fail("unbalanced quotes");
            const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            if (name.empty()) return fail("empty tag name");
            if (stack.empty()) {
                if (root_seen) return fail("second root element");
                root_seen = true;
            }
            if (!self_closing) stack.push_back(name);
        }
        i = close + 1;
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (!root_seen) return fail("no root element");
    return true;
}

inline std::size_t count_occurrences(const std::string& s, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

/// Point counts of each <polyline ... points="..."/> in document order.
inline std::vector<std::size_t> polyline_point_counts(const std::string& svg) {
    std::vector<std::size_t> out;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
        const auto p = svg.find("points=\"", pos) + 8;
        const auto end = svg.find('"', p);
        const std::string pts = svg.substr(p, end - p);
        out.push_back(pts.empty() ? 0 : count_occurrences(pts, " ") + 1);
    }
    return out;
}

} // namespace refcons::testing
