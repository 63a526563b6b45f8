#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "randerslab/curvature.hpp"
#include "randerslab/indicatrix.hpp"
#include "randerslab/model.hpp"

namespace randerslab {

// A y-dependent tangent vector field xi(x, y), evaluable at several dual
// nesting levels so that derived fields can differentiate through it.
// Level k is needed when k more derivative sweeps will wrap this evaluation.
class FiberField {
  public:
    virtual ~FiberField() = default;
    virtual Vec2<double> eval(const Vec2<double>& x, const Vec2<double>& y) const = 0;
    virtual Vec2<D1> eval(const Vec2<D1>& x, const Vec2<D1>& y) const = 0;
    virtual Vec2<D2> eval(const Vec2<D2>& x, const Vec2<D2>& y) const = 0;
    virtual Vec2<D3> eval(const Vec2<D3>& x, const Vec2<D3>& y) const = 0;
    virtual Vec2<D4> eval(const Vec2<D4>& x, const Vec2<D4>& y) const = 0;
    virtual int homogeneity() const { return 1; }
};

using FieldPtr = std::shared_ptr<const FiberField>;

// Dispatches all five virtual levels to Derived::template operator()<S>.
template <class Derived>
class FiberFieldMixin : public FiberField {
  public:
    Vec2<double> eval(const Vec2<double>& x, const Vec2<double>& y) const override {
        return self().template evaluate<double>(x, y);
    }
    Vec2<D1> eval(const Vec2<D1>& x, const Vec2<D1>& y) const override {
        return self().template evaluate<D1>(x, y);
    }
    Vec2<D2> eval(const Vec2<D2>& x, const Vec2<D2>& y) const override {
        return self().template evaluate<D2>(x, y);
    }
    Vec2<D3> eval(const Vec2<D3>& x, const Vec2<D3>& y) const override {
        return self().template evaluate<D3>(x, y);
    }
    Vec2<D4> eval(const Vec2<D4>& x, const Vec2<D4>& y) const override {
        return self().template evaluate<D4>(x, y);
    }

  private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// xi = R(e1, e2) as a fiber field.
class CurvatureField final : public FiberFieldMixin<CurvatureField> {
  public:
    explicit CurvatureField(const ModelVariant& m) : m_(m) {}

    template <class S>
    Vec2<S> evaluate(const Vec2<S>& x, const Vec2<S>& y) const {
        Vec2<S> e1{S(1.0), S(0.0)};
        Vec2<S> e2{S(0.0), S(1.0)};
        return curvature_vector_eval(m_, x, y, e1, e2);
    }

  private:
    ModelVariant m_;
};

// Horizontal Berwald covariant derivative of a fiber field:
//   (nabla_j xi)^i = dxi^i/dx^j - G^k_j dxi^i/dy^k + G^i_{jk} xi^k.
// Each evaluation at level L calls the inner field at level L+1, so a field
// derived kMaxDerivativeDepth times can only be evaluated at level 0.
inline constexpr int kMaxDerivativeDepth = 4;

class BerwaldDerived final : public FiberField {
  public:
    BerwaldDerived(const ModelVariant& m, FieldPtr inner, int j) : m_(m), inner_(std::move(inner)), j_(j) {
        if (j_ != 1 && j_ != 2) throw std::invalid_argument("BerwaldDerived: j must be 1 or 2");
    }

    template <class S>
    Vec2<S> evaluate(const Vec2<S>& x, const Vec2<S>& y) const {
        using D = Dual<S>;
        int j = j_ - 1;

        Vec2<D> xj{D{x[0]}, D{x[1]}};
        xj[j].d = S(1.0);
        Vec2<D> y0{D{y[0]}, D{y[1]}};
        Vec2<D> dx = inner_->eval(xj, y0);  // .d = dxi/dx^j

        Vec2<D> x0{D{x[0]}, D{x[1]}};
        Mat2<S> dy{};  // dy[k][i] = dxi^i/dy^k
        for (int k = 0; k < 2; ++k) {
            Vec2<D> yk{D{y[0]}, D{y[1]}};
            yk[k].d = S(1.0);
            Vec2<D> v = inner_->eval(x0, yk);
            dy[k][0] = v[0].d;
            dy[k][1] = v[1].d;
        }

        Vec2<S> xi{dx[0].a, dx[1].a};
        Mat2<S> Gj = spray_Gj_eval(m_, x, y);
        Ten3<S> Gjk = spray_Gjk_eval(m_, x, y);

        Vec2<S> out{};
        for (int i = 0; i < 2; ++i) {
            S acc = (i == 0 ? dx[0].d : dx[1].d);
            for (int k = 0; k < 2; ++k)
                acc = acc - Gj[k][j] * dy[k][i] + Gjk[i][j][k] * xi[k];
            out[i] = acc;
        }
        return out;
    }

    Vec2<double> eval(const Vec2<double>& x, const Vec2<double>& y) const override {
        return evaluate<double>(x, y);
    }
    Vec2<D1> eval(const Vec2<D1>& x, const Vec2<D1>& y) const override {
        return evaluate<D1>(x, y);
    }
    Vec2<D2> eval(const Vec2<D2>& x, const Vec2<D2>& y) const override {
        return evaluate<D2>(x, y);
    }
    Vec2<D3> eval(const Vec2<D3>& x, const Vec2<D3>& y) const override {
        return evaluate<D3>(x, y);
    }
    Vec2<D4> eval(const Vec2<D4>&, const Vec2<D4>&) const override {
        throw std::runtime_error("BerwaldDerived: derivative depth cap (4) exceeded");
    }

  private:
    ModelVariant m_;
    FieldPtr inner_;
    int j_;
};

inline FieldPtr curvature_field(const ModelVariant& m) {
    return std::make_shared<CurvatureField>(m);
}

inline FieldPtr berwald_derivative(const ModelVariant& m, FieldPtr field, int j) {
    return std::make_shared<BerwaldDerived>(m, std::move(field), j);
}

using MultiIndex = std::vector<int>;  // entries in {1, 2}, length <= kMaxDerivativeDepth

// nabla_{i1} nabla_{i2} ... nabla_{ik} xi, i.e. the leftmost index is the
// outermost (last-applied) derivative, then restricted to the origin
// indicatrix. Returns the coefficient against d/dt and its ratio to the
// restricted coefficient of xi itself (which never vanishes).
struct IteratedRestriction {
    std::vector<double> t;
    std::vector<double> coeff;        // c(t), field = c(t) d/dt
    std::vector<double> ratio;        // c(t) / omega(t)
    double residual;                  // tangency defect
};

IteratedRestriction iterated_restriction(const ModelVariant& m, const MultiIndex& idx,
                                         int samples = 256);

}  // namespace randerslab
