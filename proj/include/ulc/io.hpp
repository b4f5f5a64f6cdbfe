#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ulc/instance.hpp"

namespace ulc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

// Text instance format, line oriented, '#' starts a comment line:
//   ulc 1
//   n <n> m <m> sigma <s> k <k>
//   v <id> tau <l1> <l2> ...          (optional; default is all labels)
//   undeletable <id>                  (optional)
//   e <u> <v> <p1> ... <ps>           (exactly m; p gives phi_{e,u})
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

// Canonical serialization; extra '#' comment lines may be prepended.
void serialize_instance(std::ostream& out, const Instance& inst,
                        const std::vector<std::string>& comments = {});

// Solution format: "YES"/"NO"; if YES, a "delete ..." line followed by one
// "label <v> <i>" line per remaining vertex, vertices ascending.
void serialize_solution(std::ostream& out, const Solution& sol);
Solution parse_solution(std::istream& in);
Solution parse_solution_file(const std::string& path);

// Debug export of the auxiliary graph as a dense-index edge list:
// "aux <n*s> <m*s>" header then one "<a> <b>" line per aux edge.
void write_aux_graph(std::ostream& out, const Instance& inst);

}  // namespace ulc
