#ifndef ANGELESCO_PARAMS_HPP
#define ANGELESCO_PARAMS_HPP

namespace angelesco {

/// Parameters of the two-interval Jacobi-Angelesco weight
///   w(x) = (x-a)^alpha |x|^beta (1-x)^gamma  on [a,0] u [0,1],
/// with a < 0 and alpha, beta, gamma > -1.
struct AngelescoParams {
    double a;
    double alpha;
    double beta;
    double gamma;
};

/// Throws std::domain_error naming the offending field.
AngelescoParams validate_params(const AngelescoParams& p);

/// (x-a)^alpha |x|^beta (1-x)^gamma for x in [a,1].  At a point where a
/// negative exponent makes the weight blow up the value is +infinity.
double eval_weight(double x, const AngelescoParams& p);

/// w'(x)/w(x) = alpha/(x-a) + beta/x - gamma/(1-x), x not in {a, 0, 1}.
double weight_log_derivative(double x, const AngelescoParams& p);

}  // namespace angelesco

#endif
