#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hm::cli {

struct Streams {
    std::istream& in;
    std::ostream& out;  // reports
    std::ostream& err;  // diagnostics
    bool color = false;  // dim internal moves in the interactive session
};

// Exit status: 0 when every requested check passes, 1 on a semantic failure or rejected
// input term, 2 on bad flags. HIDDENMOVES_BOUNDS (JSON) overrides the default probe bounds;
// explicit flags override both.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace hm::cli
