#include "sgm/bs_oracle.hpp"

namespace sgm {

BSGroup::BSGroup(long m, long n) : _m(m), _n(n), _alphabet(make_alphabet({"a", "b"})) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("BS(m, n) needs nonzero m and n");
  }
}

Presentation BSGroup::presentation() const {
  Letters r;
  auto a = Letter::generator(0);
  auto b = Letter::generator(1);
  r.push_back(a.inverse());
  for (long i = 0; i < std::abs(_m); ++i) {
    r.push_back(_m > 0 ? b : b.inverse());
  }
  r.push_back(a);
  for (long i = 0; i < std::abs(_n); ++i) {
    r.push_back(_n > 0 ? b.inverse() : b);
  }
  return Presentation(_alphabet, {r});
}

namespace {

void check_alphabet(BSGroup const& g, Word const& w) {
  if (!same_alphabet(*w.alphabet(), *g.alphabet())) {
    throw AlphabetMismatch("Baumslag-Solitar words must be over {a, b}");
  }
}

class Reducer {
 public:
  Reducer(long m, long n) : _m(m), _n(n) {}

  void push_power(BigInt k) {
    if (k == 0) {
      return;
    }
    if (!_stack.empty() && !_stack.back().stable) {
      _stack.back().exponent += k;
      if (_stack.back().exponent == 0) {
        _stack.pop_back();
      }
      return;
    }
    _stack.push_back({false, std::move(k)});
  }

  void push_stable(int e) {
    if (!_stack.empty() && _stack.back().stable && _stack.back().exponent == -e) {
      _stack.pop_back();
      return;
    }
    std::size_t size = _stack.size();
    if (size >= 2 && !_stack[size - 1].stable && _stack[size - 2].stable &&
        _stack[size - 2].exponent == -e) {
      BigInt k = _stack[size - 1].exponent;
      // e = +1: a^-1 b^k a; e = -1: a b^k a^-1.
      BigInt divisor = e > 0 ? _m : _n;
      BigInt factor = e > 0 ? _n : _m;
      if (k % divisor == 0) {
        _stack.resize(size - 2);
        push_power(k / divisor * factor);
        return;
      }
    }
    _stack.push_back({true, e});
  }

  std::vector<Syllable> take() { return std::move(_stack); }

 private:
  long _m, _n;
  std::vector<Syllable> _stack;
};

}  // namespace

std::vector<Syllable> britton_normal_form(BSGroup const& g, Word const& w) {
  check_alphabet(g, w);
  Reducer r(g.m(), g.n());
  for (Letter x : w.letters()) {
    if (x.index() == 0) {
      r.push_stable(x.sign());
    } else {
      r.push_power(x.sign());
    }
  }
  return r.take();
}

bool is_britton_reduced(BSGroup const& g, std::vector<Syllable> const& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].stable && s[i].exponent != 1 && s[i].exponent != -1) {
      return false;
    }
    if (!s[i].stable && s[i].exponent == 0) {
      return false;
    }
    if (i + 1 < s.size()) {
      if (!s[i].stable && !s[i + 1].stable) {
        return false;
      }
      if (s[i].stable && s[i + 1].stable && s[i].exponent == -s[i + 1].exponent) {
        return false;
      }
    }
    if (i + 2 < s.size() && s[i].stable && !s[i + 1].stable && s[i + 2].stable &&
        s[i].exponent == -s[i + 2].exponent) {
      long divisor = s[i].exponent < 0 ? g.m() : g.n();
      if (s[i + 1].exponent % divisor == 0) {
        return false;
      }
    }
  }
  return true;
}

Word britton_reduce(BSGroup const& g, Word const& w) {
  Letters out;
  for (auto const& s : britton_normal_form(g, w)) {
    if (s.stable) {
      out.push_back(Letter::generator(0, s.exponent < 0));
      continue;
    }
    if (abs(s.exponent) > 1'000'000) {
      throw std::overflow_error("b-exponent too large to spell out");
    }
    auto k = static_cast<long>(s.exponent);
    for (long i = 0; i < std::abs(k); ++i) {
      out.push_back(Letter::generator(1, k < 0));
    }
  }
  return Word(g.alphabet(), std::move(out));
}

bool bs_is_identity(BSGroup const& g, Word const& w) {
  return britton_normal_form(g, w).empty();
}

bool fiber_member_oracle(BSGroup const& g, Word const& w1, Word const& w2) {
  return bs_is_identity(g, concat(invert(w1), w2));
}

}  // namespace sgm
