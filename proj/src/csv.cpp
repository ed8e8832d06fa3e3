#include "zenoptics/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include "zenoptics/units.hpp"

namespace zenoptics {

std::string trace_csv(const IntensityTrace& trace) {
    std::string out = "z,intensity\n";
    for (const TracePoint& p : trace.points) {
        out += format_double(p.z);
        out += ',';
        out += format_double(p.intensity);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const ZenoSweepResult& sweep, double total_angle) {
    std::string out = "N,ratio,deficit_times_N\n";
    for (const SweepRow& row : sweep.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_double(row.ratio);
        out += ',';
        out += format_double(asymptotic_deficit(row.n, total_angle));
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

NumericCsv parse_numeric_csv(std::string_view text) {
    NumericCsv csv;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        if (line.empty()) continue;
        ++line_no;

        if (line_no == 1) {
            for (std::string_view cell : split(line, ',')) csv.header.emplace_back(cell);
            continue;
        }
        std::vector<double> row;
        for (std::string_view cell : split(line, ',')) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw std::invalid_argument("csv: non-numeric cell '" + std::string(cell) +
                                            "' on line " + std::to_string(line_no));
            row.push_back(v);
        }
        if (row.size() != csv.header.size())
            throw std::invalid_argument("csv: line " + std::to_string(line_no) + " has " +
                                        std::to_string(row.size()) + " cells, expected " +
                                        std::to_string(csv.header.size()));
        csv.rows.push_back(std::move(row));
    }
    if (csv.header.empty()) throw std::invalid_argument("csv: empty input");
    return csv;
}

}  // namespace zenoptics
