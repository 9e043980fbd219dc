#include "metafor/core/m4.hpp"
#include "metafor/util/csv.hpp"
#include "metafor/util/errors.hpp"

#include <cmath>
#include <sstream>

namespace metafor::core {

std::vector<TimeSeries> parse_m4_csv(const std::string& text,
                                     Frequency frequency,
                                     const std::set<std::string>& exclusions) {
    std::vector<TimeSeries> out;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = util::split_csv_line(line);
        // Skip a header row of the common "V1,V2,..." or quoted-id shape.
        if (row == 1 && cells.size() >= 2 && (cells[1] == "V1" || cells[1] == "V2")) continue;

        std::string id = cells[0];
        if (!id.empty() && id.front() == '"' && id.back() == '"' && id.size() >= 2) {
            id = id.substr(1, id.size() - 2);
        }
        // Strip trailing empty cells.
        std::size_t last = cells.size();
        while (last > 1 && cells[last - 1].empty()) --last;

        TimeSeries s;
        s.id = id;
        s.frequency = frequency;
        s.values.reserve(last - 1);
        for (std::size_t c = 1; c < last; ++c) {
            double v;
            if (cells[c].empty() || !util::parse_double(cells[c], v) || !std::isfinite(v)) {
                throw util::DataError("parse error at (row " + id + ", col " + std::to_string(c + 1) + ")");
            }
            s.values.push_back(v);
        }
        if (s.values.empty()) throw util::DataError("series " + id + " has no values");
        if (exclusions.count(id)) continue;
        out.push_back(std::move(s));
    }
    return out;
}

std::string to_m4_csv(const std::vector<TimeSeries>& series) {
    std::string out;
    for (const auto& s : series) {
        out += s.id;
        for (double v : s.values) {
            out += ',';
            out += util::format_double(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace metafor::core
