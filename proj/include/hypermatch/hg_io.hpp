#pragma once

#include <iosfwd>
#include <string>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Text format `.hg`: first non-comment line `k n`; each following line one
// edge as k space-separated 0-based vertex ids; `#` starts a comment.
// The reader reports violations with 1-based line numbers; the writer emits
// canonical order.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

void write_hg(std::ostream& out, const Hypergraph& h,
              const std::string& header_comment = "");
void write_hg_file(const std::string& path, const Hypergraph& h,
                   const std::string& header_comment = "");

} // namespace hypermatch
