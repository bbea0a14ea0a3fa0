#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sturmpal {

// Palindromic tree (eertree) over the binary alphabet, with the extra links
// needed for palindromic-length computations:
//
//   suffix_link(v)  longest proper palindromic suffix of v
//   diff(v)         len(v) - len(suffix_link(v))
//   series_link(v)  longest proper palindromic suffix with a different diff,
//                   i.e. the head of the previous arithmetic series
//
// Node 0 is the length  -1 root, node 1 the length 0 root. After add(),
// last() is the node of the longest palindromic suffix of the text so far.
class Eertree {
 public:
  Eertree() { reset(); }

  void reset();

  // Appends c ('0' or '1') and returns last().
  std::int32_t add(char c);

  std::int32_t last() const { return last_; }
  std::size_t text_size() const { return text_.size(); }
  std::size_t node_count() const { return nodes_.size(); }

  std::int32_t len(std::int32_t v) const { return nodes_[v].len; }
  std::int32_t suffix_link(std::int32_t v) const { return nodes_[v].suf; }
  std::int32_t series_link(std::int32_t v) const { return nodes_[v].series; }
  std::int32_t diff(std::int32_t v) const { return nodes_[v].diff; }

 private:
  struct Node {
    std::int32_t len;
    std::int32_t suf;
    std::int32_t series;
    std::int32_t diff;
    std::int32_t next[2];
  };

  // Deepest palindromic-suffix ancestor of v that can be extended by c at
  // the current end of the text.
  std::int32_t extendable(std::int32_t v, char c) const;

  std::vector<Node> nodes_;
  std::string text_;
  std::int32_t last_ = 1;
};

}  // namespace sturmpal
