#pragma once

namespace projdes {

/// Quaternion w + x*i + y*j + z*k over an exact or floating component type.
/// Multiplication is the Hamilton product (non-commutative).
template <class T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  Quaternion() = default;
  Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}

  Quaternion conj() const { return {w, -x, -y, -z}; }
  T abs2() const { return w * w + x * x + y * y + z * z; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator*(const Quaternion& a, const T& s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

}  // namespace projdes
