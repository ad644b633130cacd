#pragma once

/**
 * @file signed_tree.hpp
 * @brief Rooted signed binary trees and the tree -> unknotted cycle map.
 *
 * The root carries no sign, every other node is + or -. A tree with k nodes
 * has k + 1 empty child slots, numbered 1..k+1 in in-order. Adding a leaf in
 * slot i edits the cycle built so far:
 *
 *   +  insert value i+1 before position i, shift old values >= i+1 up by one
 *   -  insert value i after position i,    shift old values >= i   up by one
 *
 * starting from the cycle 21 for the bare root.
 *
 * A rotation lifts a child into its parent's place. It is allowed when the
 * child and parent carry the same sign, or when the parent is the root; in
 * the root case the lifted child loses its sign and the old root takes it.
 *
 * Text form:  root := "(" node " " node ")"
 *             node := "." | ("+"|"-") "(" node " " node ")"
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"

namespace knotperm {

enum class Sign : std::int8_t { Minus = -1, None = 0, Plus = 1 };

constexpr Sign flip(Sign s) {
  return s == Sign::Plus ? Sign::Minus : s == Sign::Minus ? Sign::Plus : Sign::None;
}

constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '?'; }

class SignedTree {
 public:
  struct Node {
    Sign sign = Sign::None;
    int left = -1;
    int right = -1;
    int parent = -1;
  };

  /// The bare root.
  SignedTree() : nodes_(1) {}

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int root() const noexcept { return root_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  bool is_leaf(int id) const { return node(id).left < 0 && node(id).right < 0; }

  /// Attaches a new signed leaf as the left or right child of @p parent.
  int add_child(int parent, bool right, Sign sign) {
    if (sign == Sign::None) throw Error(Errc::MalformedInput, "non-root nodes need a sign");
    int& slot = right ? at(parent).right : at(parent).left;
    if (slot >= 0) throw Error(Errc::MalformedInput, "child slot already occupied");
    const int id = size();
    slot = id;
    nodes_.push_back({sign, -1, -1, parent});
    return id;
  }

  /// Empty child slots in in-order: (parent id, is right child). Slot s is
  /// element s - 1.
  std::vector<std::pair<int, bool>> slots() const {
    std::vector<std::pair<int, bool>> out;
    walk_slots(root_, out);
    return out;
  }

  /// Non-root node ids in depth-first preorder.
  std::vector<int> preorder() const {
    std::vector<int> out;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v != root_) out.push_back(v);
      if (node(v).right >= 0) stack.push_back(node(v).right);
      if (node(v).left >= 0) stack.push_back(node(v).left);
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size()) * 6);
    write(root_, out);
    return out;
  }

  bool operator==(const SignedTree& other) const { return to_string() == other.to_string(); }

  /// Lifts the left (clockwise) or right child of @p v into v's place.
  /// Returns false, leaving the tree unchanged, when the rotation is not allowed.
  bool rotate(int v, bool lift_right) {
    Node& nv = at(v);
    const int w = lift_right ? nv.right : nv.left;
    if (w < 0) return false;
    const bool at_root = v == root_;
    if (!at_root && at(w).sign != nv.sign) return false;

    Node& nw = at(w);
    const int inner = lift_right ? nw.left : nw.right;
    (lift_right ? nv.right : nv.left) = inner;
    if (inner >= 0) at(inner).parent = v;
    (lift_right ? nw.left : nw.right) = v;

    const int up = nv.parent;
    nw.parent = up;
    nv.parent = w;
    if (up < 0) {
      root_ = w;
    } else {
      Node& nu = at(up);
      (nu.left == v ? nu.left : nu.right) = w;
    }
    if (at_root) {
      nv.sign = nw.sign;
      nw.sign = Sign::None;
    }
    return true;
  }

  void negate_in_place() {
    for (auto& n : nodes_) n.sign = flip(n.sign);
  }

 private:
  Node& at(int id) { return nodes_[static_cast<std::size_t>(id)]; }

  void walk_slots(int v, std::vector<std::pair<int, bool>>& out) const {
    const Node& n = node(v);
    if (n.left >= 0) walk_slots(n.left, out); else out.emplace_back(v, false);
    if (n.right >= 0) walk_slots(n.right, out); else out.emplace_back(v, true);
  }

  void write(int v, std::string& out) const {
    if (v < 0) {
      out += '.';
      return;
    }
    const Node& n = node(v);
    if (v != root_) out += sign_char(n.sign);
    out += '(';
    write(n.left, out);
    out += ' ';
    write(n.right, out);
    out += ')';
  }

  std::vector<Node> nodes_;
  int root_ = 0;
};

namespace detail {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : s_(text) {}

  SignedTree parse() {
    SignedTree t;
    skip_ws();
    expect('(');
    children(t, t.root());
    expect(')');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  void children(SignedTree& t, int parent) {
    node(t, parent, false);
    if (pos_ >= s_.size() || s_[pos_] != ' ') fail("expected ' ' between children");
    skip_ws();
    node(t, parent, true);
  }

  void node(SignedTree& t, int parent, bool right) {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '.') {
      ++pos_;
      return;
    }
    if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
    ++pos_;
    const int id = t.add_child(parent, right, c == '+' ? Sign::Plus : Sign::Minus);
    expect('(');
    children(t, id);
    expect(')');
  }

  void expect(char c) {
    skip_ws_inside();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
  }

  void skip_ws_inside() {
    if (pos_ < s_.size() && s_[pos_] != ' ') return;
    skip_ws();
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::SyntaxError, why + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SignedTree parse_tree(std::string_view text) { return detail::TreeParser(text).parse(); }

/// xi_m(k): k below the threshold m stays, k >= m moves up by one.
constexpr int shift(int m, int k) { return k < m ? k : k + 1; }

/// Inserts a leaf of sign @p sign at relative position @p slot (1-based) of
/// the cycle @p p.
inline Permutation insert_node(const Permutation& p, int slot, Sign sign) {
  const int n = p.size();
  if (slot < 1 || slot > n)
    throw Error(Errc::SlotOutOfRange, "slot " + std::to_string(slot) + " not in 1.." + std::to_string(n));
  if (sign == Sign::None) throw Error(Errc::MalformedInput, "inserted nodes need a sign");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  const auto s = p.images();
  if (sign == Sign::Plus) {
    const int m = slot + 1;
    for (int k = 0; k < slot - 1; ++k) out.push_back(shift(m, s[static_cast<std::size_t>(k)]));
    out.push_back(slot + 1);
    for (int k = slot - 1; k < n; ++k) out.push_back(shift(m, s[static_cast<std::size_t>(k)]));
  } else {
    const int m = slot;
    for (int k = 0; k < slot; ++k) out.push_back(shift(m, s[static_cast<std::size_t>(k)]));
    out.push_back(slot);
    for (int k = slot; k < n; ++k) out.push_back(shift(m, s[static_cast<std::size_t>(k)]));
  }
  return Permutation(std::move(out));
}

/// Adds a new leaf in slot @p slot of @p t (tree-side counterpart of insert_node).
inline SignedTree insert_leaf(SignedTree t, int slot, Sign sign) {
  const auto sl = t.slots();
  if (slot < 1 || slot > static_cast<int>(sl.size()))
    throw Error(Errc::SlotOutOfRange, "slot " + std::to_string(slot) + " out of range");
  const auto [parent, right] = sl[static_cast<std::size_t>(slot - 1)];
  t.add_child(parent, right, sign);
  return t;
}

struct TreeStep {
  int node = 0;
  int slot = 0;
  Sign sign = Sign::None;
  Permutation cycle;
};

/// Runs the construction processing non-root nodes in @p order, which must
/// list every non-root node once with parents before children. Returns the
/// cycle after every step; the first entry is the starting cycle 21.
inline std::vector<TreeStep> tree_to_cycle_trace(const SignedTree& t, const std::vector<int>& order) {
  const int k = t.size();
  if (static_cast<int>(order.size()) != k - 1)
    throw Error(Errc::MalformedInput, "processing order must list every non-root node");
  std::vector<char> present(static_cast<std::size_t>(k), 0);
  present[static_cast<std::size_t>(t.root())] = 1;

  std::vector<TreeStep> steps;
  steps.push_back({t.root(), 0, Sign::None, Permutation({2, 1})});

  for (int v : order) {
    if (v < 0 || v >= k || present[static_cast<std::size_t>(v)] ||
        !present[static_cast<std::size_t>(t.node(v).parent)])
      throw Error(Errc::MalformedInput, "processing order must put parents before children");
    present[static_cast<std::size_t>(v)] = 1;

    // Relative position: empty slots of the partial tree left of v, plus one.
    int counter = 0;
    int position = 0;
    std::function<void(int)> walk = [&](int u) {
      if (u < 0 || !present[static_cast<std::size_t>(u)]) {
        ++counter;
        return;
      }
      if (u == v) position = counter + 1;
      walk(t.node(u).left);
      walk(t.node(u).right);
    };
    walk(t.root());

    steps.push_back({v, position, t.node(v).sign, insert_node(steps.back().cycle, position, t.node(v).sign)});
  }
  return steps;
}

inline Permutation tree_to_cycle(const SignedTree& t, const std::vector<int>& order) {
  return tree_to_cycle_trace(t, order).back().cycle;
}

/// Processes nodes in depth-first preorder.
inline Permutation tree_to_cycle(const SignedTree& t) { return tree_to_cycle(t, t.preorder()); }

/// A random processing order (parents before children).
template <class Rng>
std::vector<int> random_processing_order(const SignedTree& t, Rng& rng) {
  std::vector<int> ready;
  std::vector<int> order;
  auto push_children = [&](int v) {
    if (t.node(v).left >= 0) ready.push_back(t.node(v).left);
    if (t.node(v).right >= 0) ready.push_back(t.node(v).right);
  };
  push_children(t.root());
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t k = pick(rng);
    const int v = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    order.push_back(v);
    push_children(v);
  }
  return order;
}

inline SignedTree negate(SignedTree t) {
  t.negate_in_place();
  return t;
}

/// Every tree one allowed rotation away from @p t.
inline std::vector<SignedTree> rotations(const SignedTree& t) {
  std::vector<SignedTree> out;
  for (int v = 0; v < t.size(); ++v) {
    for (bool lift_right : {false, true}) {
      SignedTree r = t;
      if (r.rotate(v, lift_right)) out.push_back(std::move(r));
    }
  }
  return out;
}

/// All trees rotation-equivalent to @p t, including t, in discovery order.
inline std::vector<SignedTree> rotation_closure(const SignedTree& t) {
  std::vector<SignedTree> out{t};
  std::unordered_set<std::string> seen{t.to_string()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto& r : rotations(out[k])) {
      if (seen.insert(r.to_string()).second) out.push_back(std::move(r));
    }
  }
  return out;
}

inline bool equivalent(const SignedTree& a, const SignedTree& b) {
  if (a.size() != b.size()) return false;
  const std::string target = b.to_string();
  for (const auto& t : rotation_closure(a))
    if (t.to_string() == target) return true;
  return false;
}

/// The lexicographically smallest text form in the rotation class.
inline SignedTree canonical_form(const SignedTree& t) {
  auto closure = rotation_closure(t);
  auto best = std::min_element(closure.begin(), closure.end(), [](const auto& a, const auto& b) {
    return a.to_string() < b.to_string();
  });
  return *best;
}

/// Applies right-child lifts wherever allowed until none is. The result has
/// no right child at the root.
inline SignedTree all_left_normal_form(SignedTree t) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : [&] {
           auto order = t.preorder();
           order.insert(order.begin(), t.root());
           return order;
         }()) {
      if (t.rotate(v, true)) {
        changed = true;
        break;
      }
    }
  }
  return t;
}

/// Calls @p fn on every signed tree with exactly @p k nodes (root included):
/// Catalan(k) shapes times 2^(k-1) signings.
inline void for_each_signed_tree(int k, const std::function<void(const SignedTree&)>& fn) {
  if (k < 1) return;
  // Each pending job is a subtree of a given size hanging off a slot.
  struct Pending {
    int parent;
    bool right;
    int size;
  };
  std::function<void(SignedTree&, std::vector<Pending>&)> grow = [&](SignedTree& t, std::vector<Pending>& work) {
    if (work.empty()) {
      fn(t);
      return;
    }
    const Pending job = work.back();
    work.pop_back();
    if (job.size == 0) {
      grow(t, work);
      work.push_back(job);
      return;
    }
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      for (int left = 0; left < job.size; ++left) {
        SignedTree next = t;
        const int id = next.add_child(job.parent, job.right, s);
        work.push_back({id, true, job.size - 1 - left});
        work.push_back({id, false, left});
        grow(next, work);
        work.pop_back();
        work.pop_back();
      }
    }
    work.push_back(job);
  };
  for (int left = 0; left < k; ++left) {
    SignedTree t;
    std::vector<Pending> work{{t.root(), true, k - 1 - left}, {t.root(), false, left}};
    grow(t, work);
  }
}

/// One canonical representative per rotation class of trees with @p k nodes,
/// sorted by text form.
inline std::vector<SignedTree> canonical_classes(int k) {
  std::unordered_set<std::string> seen;
  std::vector<SignedTree> reps;
  for_each_signed_tree(k, [&](const SignedTree& t) {
    if (seen.count(t.to_string())) return;
    auto closure = rotation_closure(t);
    const SignedTree* best = &closure.front();
    for (const auto& c : closure) {
      seen.insert(c.to_string());
      if (c.to_string() < best->to_string()) best = &c;
    }
    reps.push_back(*best);
  });
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  return reps;
}

}  // namespace knotperm
