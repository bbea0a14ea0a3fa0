#include "sturmpal/eertree.hpp"

#include <stdexcept>

namespace sturmpal {

void Eertree::reset() {
  nodes_.clear();
  text_.clear();
  // Node 0: the length -1 root; node 1: the empty palindrome.
  nodes_.push_back(Node{-1, 0, 0, 0, {-1, -1}});
  nodes_.push_back(Node{0, 0, 1, 0, {-1, -1}});
  last_ = 1;
}

std::int32_t Eertree::extendable(std::int32_t v, char c) const {
  const std::int32_t pos = static_cast<std::int32_t>(text_.size()) - 1;
  while (true) {
    const std::int32_t l = nodes_[v].len;
    if (pos - l - 1 >= 0 && text_[pos - l - 1] == c) return v;
    v = nodes_[v].suf;
  }
}

std::int32_t Eertree::add(char c) {
  if (c != '0' && c != '1') {
    throw std::invalid_argument("eertree works over the binary alphabet '0'/'1'");
  }
  text_.push_back(c);
  const int bit = c - '0';

  const std::int32_t host = extendable(last_, c);
  if (nodes_[host].next[bit] >= 0) {
    last_ = nodes_[host].next[bit];
    return last_;
  }

  const std::int32_t len = nodes_[host].len + 2;
  std::int32_t suf;
  if (len == 1) {
    suf = 1;
  } else {
    const std::int32_t w = extendable(nodes_[host].suf, c);
    suf = nodes_[w].next[bit];
  }

  Node node;
  node.len = len;
  node.suf = suf;
  node.diff = len - nodes_[suf].len;
  node.series = (node.diff == nodes_[suf].diff && nodes_[suf].len > 0)
                    ? nodes_[suf].series
                    : suf;
  node.next[0] = node.next[1] = -1;

  const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(node);
  nodes_[host].next[bit] = id;
  last_ = id;
  return last_;
}

}  // namespace sturmpal
