#include "arcsinc/output.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace arcsinc {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_csv(const std::vector<OutputRecord>& records) {
    std::string out = "k,x,y,method,err,work\n";
    for (const OutputRecord& r : records) {
        out += std::to_string(r.k);
        out += ',';
        out += format_double(r.x);
        out += ',';
        out += format_double(r.y);
        out += ',';
        out += r.method;
        out += ',';
        out += format_double(r.err_estimate);
        out += ',';
        out += std::to_string(r.work);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<OutputRecord>& records) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const OutputRecord& r = records[i];
        out += "  {\"k\": ";
        out += std::to_string(r.k);
        out += ", \"x\": ";
        out += format_double(r.x);
        out += ", \"y\": ";
        out += format_double(r.y);
        out += ", \"method\": \"";
        out += r.method;
        out += "\", \"err\": ";
        out += format_double(r.err_estimate);
        out += ", \"work\": ";
        out += std::to_string(r.work);
        out += '}';
        if (i + 1 < records.size()) out += ',';
        out += '\n';
    }
    out += "]\n";
    return out;
}

std::string render(const std::vector<OutputRecord>& records, OutputFormat fmt) {
    return fmt == OutputFormat::csv ? to_csv(records) : to_json(records);
}

}  // namespace arcsinc
