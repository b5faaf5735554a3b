#include "cubeforge/cubeset.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "cubeforge/reedy.hpp"

namespace cubeforge {

namespace {

std::string table_id(const CubeMap& f) {
  std::string s;
  for (std::size_t v = 0; v < f.table().size(); ++v) {
    if (v) s += '.';
    s += std::to_string(f.table()[v]);
  }
  return s;
}

}  // namespace

int TruncatedCubicalSet::cell_index(int dim, const std::string& id) const {
  const auto& cs = cells_.at(dim);
  const auto it = std::find(cs.begin(), cs.end(), id);
  return it == cs.end() ? -1 : static_cast<int>(it - cs.begin());
}

const std::vector<int>& TruncatedCubicalSet::action(const CubeMap& f) const {
  if (f.dom() > trunc_ || f.cod() > trunc_)
    throw std::invalid_argument("action: morphism endpoints exceed the truncation");
  const int idx = homs_->at(f.dom(), f.cod()).find(f);
  if (idx < 0) throw std::invalid_argument("action: not a site morphism: " + f.str());
  const auto& a = actions_[f.dom()][f.cod()][idx];
  if (a.empty() && !cells_[f.cod()].empty())
    throw std::invalid_argument("action: morphism not reached by the generators: " + f.str());
  return a;
}

TruncatedCubicalSet TruncatedCubicalSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cubical set file " + path);
  nlohmann::json j;
  in >> j;
  return load(j);
}

TruncatedCubicalSet TruncatedCubicalSet::load(const nlohmann::json& j) {
  TruncatedCubicalSet X;
  X.cfg_ = SiteConfig::parse(j.at("site").get<std::string>());
  X.trunc_ = j.at("trunc").get<int>();
  if (X.trunc_ < 0 || X.trunc_ > 6) throw std::runtime_error("trunc out of range");
  X.cells_.assign(X.trunc_ + 1, {});
  for (int k = 0; k <= X.trunc_; ++k) {
    const std::string key = std::to_string(k);
    if (j.at("cells").contains(key))
      X.cells_[k] = j.at("cells").at(key).get<std::vector<std::string>>();
    for (const auto& id : X.cells_[k])
      if (std::count(X.cells_[k].begin(), X.cells_[k].end(), id) != 1)
        throw std::runtime_error("duplicate cell id '" + id + "' in dimension " + key);
  }
  X.homs_ = std::make_shared<const HomTable>(X.cfg_, X.trunc_);

  // atom actions from the file
  const auto& actions = j.at("actions");
  X.actions_.assign(X.trunc_ + 1,
                    std::vector<std::vector<std::vector<int>>>(X.trunc_ + 1));
  X.words_.assign(X.trunc_ + 1, {});
  for (int a = 0; a <= X.trunc_; ++a)
    for (int b = 0; b <= X.trunc_; ++b)
      X.actions_[a][b].assign(X.homs_->at(a, b).size(), {});
  for (int a = 0; a <= X.trunc_; ++a) X.words_[a].assign(X.homs_->at(a, a).size(), "");

  std::size_t expected_keys = 0;
  std::vector<std::tuple<GeneratorAtom, int, std::vector<int>>> atom_actions;
  for (int k = 0; k <= X.trunc_; ++k)
    for (const auto& atom : atoms_from(X.cfg_, k, X.trunc_)) {
      ++expected_keys;
      const std::string key = atom.token() + "@" + std::to_string(k);
      if (!actions.contains(key)) throw std::runtime_error("missing action '" + key + "'");
      const int cod = k + atom.dim_delta();
      std::vector<int> act(X.cells_[cod].size(), -1);
      const auto& obj = actions.at(key);
      if (obj.size() != X.cells_[cod].size())
        throw std::runtime_error("action '" + key + "' must cover every cell of dimension " +
                                 std::to_string(cod));
      for (const auto& [from, to] : obj.items()) {
        const int fi = X.cell_index(cod, from);
        const int ti = X.cell_index(k, to.get<std::string>());
        if (fi < 0 || ti < 0)
          throw std::runtime_error("action '" + key + "' references unknown cells");
        act[fi] = ti;
      }
      atom_actions.emplace_back(atom, k, std::move(act));
    }
  if (actions.size() != expected_keys)
    throw std::runtime_error("unexpected or duplicate action keys (expected " +
                             std::to_string(expected_keys) + ")");

  // seed the per-morphism action table with the atoms
  for (const auto& [atom, k, act] : atom_actions) {
    const CubeMap m = atom_map(atom, k);
    const int idx = X.homs_->at(k, m.cod()).find(m);
    if (idx < 0)
      throw std::runtime_error("atom " + atom.token() + "@" + std::to_string(k) +
                               " is not a site morphism");
    // distinct atoms can name the same map; they must then agree
    auto& slot = X.actions_[k][m.cod()][idx];
    if (!slot.empty() && slot != act)
      throw FunctorialityError("two atoms for the same map act differently",
                               atom.token() + "@" + std::to_string(k), "earlier atom");
    slot = act;
  }

  X.validate_functoriality();
  X.compute_degeneracies();
  return X;
}

void TruncatedCubicalSet::validate_functoriality() {
  // Walk the composite graph: start from identities, extend by one atom at a
  // time, and check agreement whenever a morphism is reached twice. Atom
  // actions seeded above are treated as reached words of length one.
  struct Node {
    int dom, cod, idx;
  };
  std::deque<Node> queue;

  std::vector<std::vector<std::vector<std::string>>> word(trunc_ + 1);
  for (int a = 0; a <= trunc_; ++a) {
    word[a].resize(trunc_ + 1);
    for (int b = 0; b <= trunc_; ++b) word[a][b].assign(homs_->at(a, b).size(), "");
  }

  // identities act as identities; an atom seed claiming the identity map
  // must agree with that
  for (int n = 0; n <= trunc_; ++n) {
    const CubeMap id = CubeMap::identity(n);
    const int idx = homs_->at(n, n).find(id);
    if (idx < 0) throw std::logic_error("identity missing from the hom table");
    std::vector<int> act(cells_[n].size());
    for (std::size_t c = 0; c < act.size(); ++c) act[c] = static_cast<int>(c);
    auto& slot = actions_[n][n][idx];
    if (!slot.empty() && slot != act)
      throw FunctorialityError("an atom equals the identity but does not act as it", "1",
                               "atom seed");
    slot = act;
    word[n][n][idx] = "1";
    queue.push_back(Node{n, n, idx});
  }

  while (!queue.empty()) {
    const Node node = queue.front();
    queue.pop_front();
    const CubeMap& f = homs_->at(node.dom, node.cod).maps[node.idx];
    const auto f_act = actions_[node.dom][node.cod][node.idx];  // copy: queue may grow the table
    const std::string f_word = word[node.dom][node.cod][node.idx];

    for (const auto& atom : atoms_from(cfg_, node.cod, trunc_)) {
      const CubeMap am = atom_map(atom, node.cod);
      const int acod = am.cod();
      const int a_idx = homs_->at(node.cod, acod).find(am);
      if (a_idx < 0)
        throw std::logic_error("atom outside the site during validation: " + am.str());
      const auto& a_act = actions_[node.cod][acod][a_idx];

      const CubeMap m = compose(am, f);
      const int m_idx = homs_->at(node.dom, acod).find(m);
      if (m_idx < 0)
        throw std::logic_error("composite left the site during validation: " + m.str());

      std::vector<int> act(cells_[acod].size());
      for (std::size_t c = 0; c < act.size(); ++c) act[c] = f_act[a_act[c]];
      const std::string m_word = atom.token() + (f_word == "1" ? "" : " . " + f_word);

      auto& slot = actions_[node.dom][acod][m_idx];
      auto& w = word[node.dom][acod][m_idx];
      if (!slot.empty() || !act.empty()) {
        if (!slot.empty() && slot != act)
          throw FunctorialityError("words for " + m.str() + " act differently",
                                   w.empty() ? "atom seed" : w, m_word);
        if (slot.empty()) slot = std::move(act);
      }
      if (w.empty()) {
        w = m_word;
        queue.push_back(Node{node.dom, acod, m_idx});
      }
    }
  }

  if (!cfg_.diagonals) {
    // every site morphism between truncated dimensions must have been reached
    for (int a = 0; a <= trunc_; ++a)
      for (int b = 0; b <= trunc_; ++b)
        for (std::size_t i = 0; i < homs_->at(a, b).size(); ++i)
          if (word[a][b][i].empty())
            throw std::logic_error("morphism not generated by atoms: " +
                                   homs_->at(a, b).maps[i].str());
  }
}

void TruncatedCubicalSet::compute_degeneracies() {
  degenerate_.assign(trunc_ + 1, {});
  for (int k = 0; k <= trunc_; ++k) {
    degenerate_[k].assign(cells_[k].size(), 0);
    for (int j = 0; j < k; ++j) {
      const auto& hs = homs_->at(k, j);
      for (std::size_t qi = 0; qi < hs.size(); ++qi) {
        if (!hs.surjective[qi]) continue;
        const auto& act = actions_[k][j][qi];
        for (std::size_t y = 0; y < cells_[j].size(); ++y) degenerate_[k][act[y]] = 1;
      }
    }
  }
}

EZDecomposition ez_decompose(const TruncatedCubicalSet& X, int k, const std::string& cell_id) {
  const int x = X.cell_index(k, cell_id);
  if (x < 0) throw std::invalid_argument("unknown cell '" + cell_id + "'");
  for (int j = 0; j <= k; ++j) {
    const auto& hs = X.homs().at(k, j);
    for (std::size_t qi = 0; qi < hs.size(); ++qi) {
      if (!hs.surjective[qi]) continue;
      const auto& act = X.action(hs.maps[qi]);
      for (std::size_t y = 0; y < X.cells(j).size(); ++y)
        if (act[y] == x && X.nondegenerate(j, static_cast<int>(y)))
          return EZDecomposition{hs.maps[qi], j, static_cast<int>(y), X.cells(j)[y]};
    }
  }
  throw std::logic_error("no decomposition found for cell '" + cell_id + "'");
}

CheckReport ez_uniqueness_check(const TruncatedCubicalSet& X) {
  CheckReport r{.name = "presheaf-ez-uniqueness"};
  if (X.config().diagonals)
    throw std::invalid_argument("ez_uniqueness_check requires a non-diagonal site");
  std::int64_t cells_checked = 0, decomposition_pairs = 0;

  struct Dec {
    const CubeMap* q;
    int j, y;
  };

  for (int k = 0; k <= X.trunc(); ++k) {
    for (int x = 0; x < static_cast<int>(X.cells(k).size()); ++x) {
      ++cells_checked;
      std::vector<Dec> decs;
      int min_factor_dim = k;
      bool min_dim_all_nondegenerate = true;

      for (int j = 0; j <= k; ++j) {
        const auto& hs = X.homs().at(k, j);
        for (std::size_t qi = 0; qi < hs.size(); ++qi) {
          if (!hs.surjective[qi]) continue;
          const auto& act = X.action(hs.maps[qi]);
          for (int y = 0; y < static_cast<int>(X.cells(j).size()); ++y) {
            if (act[y] != x) continue;
            if (j < min_factor_dim) {
              min_factor_dim = j;
              min_dim_all_nondegenerate = true;
            }
            if (j == min_factor_dim && !X.nondegenerate(j, y))
              min_dim_all_nondegenerate = false;
            if (X.nondegenerate(j, y)) decs.push_back(Dec{&hs.maps[qi], j, y});
          }
        }
      }

      if (decs.empty()) {
        r.fail("cell without decomposition: " + X.cells(k)[x]);
        continue;
      }
      if (!min_dim_all_nondegenerate)
        r.fail("minimal-dimension factorization hit a degenerate cell at " + X.cells(k)[x]);

      for (std::size_t a = 0; a < decs.size(); ++a)
        for (std::size_t b = a + 1; b < decs.size(); ++b) {
          ++decomposition_pairs;
          if (decs[a].j != decs[b].j) {
            r.fail("decompositions at different dimensions for cell " + X.cells(k)[x]);
            continue;
          }
          int count = 0;
          for (const auto& phi : X.homs().isos(decs[a].j)) {
            if (compose(phi, *decs[a].q) != *decs[b].q) continue;
            if (X.action(phi)[decs[b].y] == decs[a].y) ++count;
          }
          if (count != 1)
            r.fail("decompositions of " + X.cells(k)[x] + " related by " + std::to_string(count) +
                   " isomorphisms (want exactly 1)");
        }
    }
  }
  r.stats["cells"] = cells_checked;
  r.stats["decomposition_pairs"] = decomposition_pairs;
  return r;
}

namespace {

nlohmann::json fixture_json(const SiteConfig& cfg, int n, int trunc,
                            const std::function<std::string(const CubeMap&)>& id_of) {
  HomTable homs(cfg, std::max(n, trunc));
  nlohmann::json j;
  j["site"] = cfg.name();
  j["trunc"] = trunc;
  auto cells = nlohmann::json::object();
  for (int k = 0; k <= trunc; ++k) {
    std::vector<std::string> ids;
    for (const auto& h : homs.at(k, n).maps) {
      const std::string id = id_of(h);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    cells[std::to_string(k)] = ids;
  }
  j["cells"] = cells;
  auto actions = nlohmann::json::object();
  for (int k = 0; k <= trunc; ++k)
    for (const auto& atom : atoms_from(cfg, k, trunc)) {
      const CubeMap am = atom_map(atom, k);
      auto obj = nlohmann::json::object();
      for (const auto& h : homs.at(am.cod(), n).maps) obj[id_of(h)] = id_of(compose(h, am));
      actions[atom.token() + "@" + std::to_string(k)] = obj;
    }
  j["actions"] = actions;
  return j;
}

}  // namespace

nlohmann::json representable_fixture(const SiteConfig& cfg, int n, int trunc) {
  return fixture_json(cfg, n, trunc, [](const CubeMap& h) { return table_id(h); });
}

nlohmann::json collapsed_vertex_fixture(const SiteConfig& cfg, int n, int trunc) {
  return fixture_json(cfg, n, trunc, [](const CubeMap& h) -> std::string {
    std::uint16_t vary = 0;
    for (const auto v : h.table()) vary |= v ^ h.table()[0];
    if (vary == 0) return "pt";  // factors through the point: collapse
    return table_id(h);
  });
}

}  // namespace cubeforge
