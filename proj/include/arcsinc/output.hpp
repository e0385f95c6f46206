#pragma once
// Record serialization for the CLI: CSV (header `k,x,y,method,err,work`) and
// a JSON array with the same keys.  Doubles are emitted in shortest
// round-trip form (std::to_chars), locale-independent.

#include <string>
#include <vector>

namespace arcsinc {

struct OutputRecord {
    int k = 0;
    double x = 0.0;
    double y = 0.0;
    std::string method;
    double err_estimate = 0.0;
    long work = 0;
};

enum class OutputFormat { csv, json };

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);
std::string render(const std::vector<OutputRecord>& records, OutputFormat fmt);

}  // namespace arcsinc
