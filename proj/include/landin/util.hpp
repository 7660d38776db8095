#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace landin {

// Persistent cons list. Shared tails make extension O(1); the destructor
// unlinks iteratively so dropping a 10^6-element chain does not blow the
// native stack.
template <typename T>
class PList {
  struct Node {
    T head;
    std::shared_ptr<Node> tail;
    std::size_t size;

    Node(T h, std::shared_ptr<Node> t)
        : head(std::move(h)), tail(std::move(t)), size(tail ? tail->size + 1 : 1) {}

    ~Node() {
      auto cur = std::move(tail);
      while (cur && cur.use_count() == 1) {
        auto next = std::move(cur->tail);
        cur = std::move(next);
      }
    }
  };

  std::shared_ptr<Node> node_;

  explicit PList(std::shared_ptr<Node> n) : node_(std::move(n)) {}

 public:
  PList() = default;

  bool empty() const { return node_ == nullptr; }
  std::size_t size() const { return node_ ? node_->size : 0; }

  const T& head() const {
    if (!node_) throw std::logic_error("PList::head on empty list");
    return node_->head;
  }

  PList tail() const {
    if (!node_) throw std::logic_error("PList::tail on empty list");
    return PList(node_->tail);
  }

  PList cons(T value) const {
    return PList(std::make_shared<Node>(std::move(value), node_));
  }

  bool identical(const PList& other) const { return node_ == other.node_; }

  friend bool operator==(const PList& a, const PList& b) {
    auto x = a.node_.get();
    auto y = b.node_.get();
    while (x && y) {
      if (x == y) return true;
      if (!(x->head == y->head)) return false;
      x = x->tail.get();
      y = y->tail.get();
    }
    return x == y;
  }
};

// Minimal value-or-error carrier used where an operation can fail for a
// reason the caller is expected to handle (g++ 11 has no std::expected).
template <typename T>
class Result {
  bool ok_;
  T value_;
  std::string error_;

  Result() : ok_(false), value_{} {}

 public:
  static Result success(T v) {
    Result r;
    r.ok_ = true;
    r.value_ = std::move(v);
    return r;
  }
  static Result failure(std::string message) {
    Result r;
    r.ok_ = false;
    r.error_ = std::move(message);
    return r;
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }

  const T& value() const {
    if (!ok_) throw std::logic_error("Result::value on error: " + error_);
    return value_;
  }
  T&& take() {
    if (!ok_) throw std::logic_error("Result::take on error: " + error_);
    return std::move(value_);
  }
  const std::string& error() const { return error_; }
};

}  // namespace landin
