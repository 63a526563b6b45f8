#pragma once

#include <cmath>
#include <type_traits>

namespace randerslab {

// Forward-mode dual number. Nesting Dual<Dual<...>> gives higher mixed
// derivatives: seed the k-th nesting level's .d with the k-th direction.
template <class T>
struct Dual {
    T a{};  // value
    T d{};  // derivative

    constexpr Dual() = default;
    constexpr Dual(double value) requires(!std::is_same_v<T, double>) : a(value) {}
    constexpr Dual(T value) : a(value) {}
    constexpr Dual(T value, T deriv) : a(value), d(deriv) {}
};

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;
using D5 = Dual<D4>;
using D6 = Dual<D5>;

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

// Innermost (plain double) value of an arbitrarily nested dual.
inline double real_part(double x) { return x; }
template <class T>
double real_part(const Dual<T>& x) { return real_part(x.a); }

template <class T>
constexpr Dual<T> operator+(const Dual<T>& u, const Dual<T>& v) {
    return {u.a + v.a, u.d + v.d};
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& u, const Dual<T>& v) {
    return {u.a - v.a, u.d - v.d};
}
template <class T>
constexpr Dual<T> operator*(const Dual<T>& u, const Dual<T>& v) {
    return {u.a * v.a, u.a * v.d + u.d * v.a};
}
template <class T>
constexpr Dual<T> operator/(const Dual<T>& u, const Dual<T>& v) {
    T q = u.a / v.a;
    return {q, (u.d - q * v.d) / v.a};
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& u) {
    return {-u.a, -u.d};
}
template <class T>
constexpr Dual<T> operator+(const Dual<T>& u) {
    return u;
}

// double mixes in on either side (promotes through all nesting levels).
template <class T>
constexpr Dual<T> operator+(const Dual<T>& u, double c) { return {u.a + c, u.d}; }
template <class T>
constexpr Dual<T> operator+(double c, const Dual<T>& u) { return {u.a + c, u.d}; }
template <class T>
constexpr Dual<T> operator-(const Dual<T>& u, double c) { return {u.a - c, u.d}; }
template <class T>
constexpr Dual<T> operator-(double c, const Dual<T>& u) { return {c - u.a, -u.d}; }
template <class T>
constexpr Dual<T> operator*(const Dual<T>& u, double c) { return {u.a * c, u.d * c}; }
template <class T>
constexpr Dual<T> operator*(double c, const Dual<T>& u) { return {u.a * c, u.d * c}; }
template <class T>
constexpr Dual<T> operator/(const Dual<T>& u, double c) { return {u.a / c, u.d / c}; }
template <class T>
constexpr Dual<T> operator/(double c, const Dual<T>& u) {
    return Dual<T>{T(c), T{}} / u;
}

using std::sqrt;
template <class T>
Dual<T> sqrt(const Dual<T>& u) {
    T r = sqrt(u.a);
    return {r, u.d / (r + r)};
}

using std::sin;
using std::cos;
template <class T>
Dual<T> sin(const Dual<T>& u) {
    return {sin(u.a), cos(u.a) * u.d};
}
template <class T>
Dual<T> cos(const Dual<T>& u) {
    return {cos(u.a), -sin(u.a) * u.d};
}

// Seeds the outermost derivative slot with 1.
template <class S>
Dual<S> seed(S value) { return {value, S(1.0)}; }

}  // namespace randerslab
