#pragma once

namespace fraclab {

// Kahan-compensated accumulator. All reductions in this library run in a
// fixed order with compensation, so results do not depend on worker count.
class KahanSum {
  public:
    KahanSum() = default;
    explicit KahanSum(double v) : sum_(v) {}

    KahanSum& operator+=(double x) {
        const double y = x - cor_;
        const volatile double t = sum_ + y;
        const volatile double z = t - sum_;
        cor_ = z - y;
        sum_ = t;
        return *this;
    }

    double value() const { return sum_ + cor_; }
    operator double() const { return value(); }

  private:
    double sum_ = 0.0;
    double cor_ = 0.0;
};

}  // namespace fraclab
