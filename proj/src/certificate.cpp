#include "maxtsp/certificate.hpp"

#include <sstream>

#include "maxtsp/instance.hpp"

namespace maxtsp {

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::five_sixths: return "five-sixths";
    case Branch::exact_dp: return "exact-dp";
    case Branch::algorithm_a: return "algorithm-A";
  }
  return "algorithm-A";
}

double Certificate::observed_ratio() const {
  return weight_cover > 0.0 ? weight_tour / weight_cover : 1.0;
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  auto put = [&out](std::string_view key, const std::string& value) {
    out << key << " = " << value << "\n";
  };
  auto put_opt = [&put](std::string_view key, const std::optional<double>& v) {
    if (v) put(key, format_double(*v));
  };
  put("branch", std::string(to_string(branch)));
  put("certified", certified ? "true" : "false");
  put_opt("epsilon", epsilon);
  put_opt("delta", delta);
  put_opt("dim", dim);
  put_opt("n_threshold", n_threshold);
  put("n", std::to_string(n));
  put("k_initial", std::to_string(k_initial));
  if (k_after_gluing) put("k_after_gluing", std::to_string(*k_after_gluing));
  if (branch == Branch::algorithm_a) put("gluings", std::to_string(gluings));
  put("weight_cover", format_double(weight_cover));
  put_opt("weight_after_gluing", weight_after_gluing);
  put("weight_tour", format_double(weight_tour));
  put("claimed_bound", format_double(claimed_bound));
  put_opt("claimed_error", claimed_error);
  put_opt("posterior_bound", posterior_bound);
  put_opt("closed_form_bound", closed_form_bound);
  put_opt("r_tau", r_tau);
  put_opt("t_min", t_min);
  put("observed_ratio", format_double(observed_ratio()));
  if (!note.empty()) put("note", note);
  return out.str();
}

}  // namespace maxtsp
