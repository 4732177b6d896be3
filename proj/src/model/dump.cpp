#include "probe/model/dump.hpp"

#include <algorithm>
#include <sstream>

namespace probe::model {

void dump(const PartialModel& model, const semantics::RewardFunction* reward, std::ostream& out) {
  const auto& weights = model.weights();
  for (StateId s = 0; s < model.state_count(); ++s) {
    Rational r = reward ? model.reward(s, *reward) : Rational(0);
    out << "STATE " << s << " " << to_string(model.state_class(s)) << " " << r.get_str() << "\n";
  }
  for (StateId s = 0; s < model.state_count(); ++s) {
    for (const Choice& c : model.choices(s)) {
      out << "TRANS " << s << " " << semantics::to_string(c.action);
      for (const Entry& e : model.entries(c)) {
        std::string w = weights.str(e.weight);
        w.erase(std::remove(w.begin(), w.end(), ' '), w.end());
        out << " " << w << " " << e.target;
      }
      out << "\n";
    }
  }
}

std::string dump(const PartialModel& model, const semantics::RewardFunction* reward) {
  std::ostringstream out;
  dump(model, reward, out);
  return out.str();
}

}  // namespace probe::model
