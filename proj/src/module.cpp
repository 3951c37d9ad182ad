#include "kahler/module.hpp"

namespace kahler {

// ===== ModuleElement ========================================================

void ModuleElement::check_owner(const ModuleElement& o) const {
  if (!owner_ || !o.owner_)
    throw ContextError("operation on a default-constructed ModuleElement");
  if (!owner_->same_as(*o.owner_))
    throw ContextError("elements belong to different modules");
}

ModuleElement ModuleElement::operator-() const {
  if (!owner_)
    throw ContextError("operation on a default-constructed ModuleElement");
  return ModuleElement(owner_, polyvec_neg(rep_));
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  check_owner(o);
  return owner_->element(polyvec_add(rep_, o.rep_));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  check_owner(o);
  return owner_->element(polyvec_sub(rep_, o.rep_));
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
  if (!owner_)
    throw ContextError("operation on a default-constructed ModuleElement");
  PolyVec v;
  v.reserve(rep_.size());
  for (const auto& p : rep_) v.push_back(p.scaled(c));
  return owner_->element(std::move(v));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (!owner_ || !o.owner_) return !owner_ && !o.owner_;
  return owner_->same_as(*o.owner_) && rep_ == o.rep_;
}

// ===== ModulePresentation ===================================================

ModulePtr ModulePresentation::make(AlgebraPtr algebra, std::size_t rank,
                                   std::vector<PolyVec> rows,
                                   std::string name, std::size_t pair_cap) {
  if (!algebra) throw ContextError("ModulePresentation: null algebra");
  const ContextPtr& ctx = algebra->context();
  auto m = std::shared_ptr<ModulePresentation>(new ModulePresentation());
  m->algebra_ = algebra;
  m->name_ = std::move(name);
  m->rank_ = rank;
  for (const auto& row : rows) {
    if (row.size() != rank)
      throw RankError("module relation row has " +
                      std::to_string(row.size()) + " components, expected " +
                      std::to_string(rank));
    for (const auto& p : row)
      require_same_context(ctx, p.context(), "module relation row");
  }
  m->user_rows_ = rows;
  // Materialize the ideal rows f * e_i so module normal forms reduce
  // componentwise representatives exactly like the algebra does.
  for (const auto& f : algebra->relations().basis())
    for (std::size_t i = 0; i < rank; ++i) {
      PolyVec r = polyvec_zero(ctx, rank);
      r[i] = f;
      rows.push_back(std::move(r));
    }
  m->rel_ = SubmoduleBasis::of(ctx, rank, std::move(rows), pair_cap);
  return m;
}

ModulePtr ModulePresentation::free_module(AlgebraPtr algebra,
                                          std::size_t rank,
                                          std::string name) {
  return make(std::move(algebra), rank, {}, std::move(name));
}

ModulePtr ModulePresentation::restricted(AlgebraMap via, ModulePtr inner,
                                         std::string name) {
  if (!inner) throw ContextError("restricted: null module");
  if (!via.source())
    throw ContextError("restricted: default-constructed algebra map");
  require_same_algebra(via.target(), inner->algebra(),
                       "restricted module (map target vs module algebra)");
  auto m = std::shared_ptr<ModulePresentation>(new ModulePresentation());
  m->algebra_ = via.source();
  m->name_ = name.empty() ? inner->name() + "_" + via.source()->name()
                          : std::move(name);
  m->via_ = std::move(via);
  m->inner_ = std::move(inner);
  return m;
}

std::size_t ModulePresentation::rank() const {
  if (!is_direct())
    throw ContextError("rank: restricted module has no direct presentation");
  return rank_;
}

const std::vector<PolyVec>& ModulePresentation::user_rows() const {
  if (!is_direct())
    throw ContextError("user_rows: module presented by restriction");
  return user_rows_;
}

const SubmoduleBasis& ModulePresentation::relations() const {
  if (!is_direct())
    throw ContextError("relations: module presented by restriction");
  return rel_;
}

const AlgebraMap& ModulePresentation::via() const {
  if (is_direct()) throw ContextError("via: module is direct");
  return *via_;
}

const ModulePtr& ModulePresentation::inner() const {
  if (is_direct()) throw ContextError("inner: module is direct");
  return inner_;
}

const ModulePresentation& ModulePresentation::carrier() const {
  return is_direct() ? *this : inner_->carrier();
}

PolyVec ModulePresentation::normalize(PolyVec v) const {
  if (is_direct()) return rel_.normal_form(v);
  return inner_->normalize(std::move(v));
}

ModuleElement ModulePresentation::element(PolyVec v) const {
  return ModuleElement(shared_from_this(), normalize(std::move(v)));
}

ModuleElement ModulePresentation::zero_element() const {
  return ModuleElement(shared_from_this(),
                       polyvec_zero(carrier_context(), carrier_rank()));
}

ModuleElement ModulePresentation::generator(std::size_t i) const {
  if (!is_direct())
    throw ContextError("generator: module presented by restriction");
  if (i >= rank_)
    throw IndexError("generator index " + std::to_string(i) +
                     " out of range (rank " + std::to_string(rank_) + ")");
  PolyVec v = polyvec_zero(algebra_->context(), rank_);
  v[i] = Poly::constant(algebra_->context(), 1);
  return element(std::move(v));
}

std::vector<ModuleElement> ModulePresentation::generators() const {
  std::vector<ModuleElement> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(generator(i));
  return out;
}

bool ModulePresentation::same_as(const ModulePresentation& o) const {
  if (this == &o) return true;
  if (is_direct() != o.is_direct()) return false;
  if (!algebra_->same_as(*o.algebra_)) return false;
  if (is_direct())
    return rank_ == o.rank_ && rel_.basis() == o.rel_.basis();
  return *via_ == *o.via_ && inner_->same_as(*o.inner_);
}

std::string ModulePresentation::to_string() const {
  if (!is_direct())
    return "module " + name_ + " = restriction of " + inner_->to_string();
  std::string s = "module " + name_ + " over " + algebra_->name() +
                  " { rank: " + std::to_string(rank_) + ";";
  if (!user_rows_.empty()) {
    s += " relations: ";
    for (std::size_t i = 0; i < user_rows_.size(); ++i) {
      if (i) s += ", ";
      s += polyvec_to_string(user_rows_[i]);
    }
    s += ";";
  }
  return s + " }";
}

// ===== action ===============================================================

ModuleElement action(const AlgebraElement& a, const ModuleElement& m) {
  if (!a.owner() || !m.owner())
    throw ContextError("action: default-constructed operand");
  const ModulePresentation& mod = *m.owner();
  require_same_algebra(a.owner(), mod.algebra(), "action");
  if (mod.is_direct()) {
    PolyVec v;
    v.reserve(m.rep().size());
    for (const auto& p : m.rep()) v.push_back(a.rep() * p);
    return mod.element(std::move(v));
  }
  // restricted: route through the algebra map, act in the inner module
  const AlgebraElement b = mod.via().apply(a);
  const ModuleElement inner_result =
      action(b, mod.inner()->element(m.rep()));
  return mod.element(inner_result.rep());
}

ModulePtr restrict_scalars(const AlgebraMap& via, ModulePtr inner,
                           std::string name) {
  return ModulePresentation::restricted(via, std::move(inner),
                                        std::move(name));
}

void require_same_module(const ModulePtr& a, const ModulePtr& b,
                         const char* where) {
  if (!a || !b) throw ContextError(std::string(where) + ": null module");
  if (!a->same_as(*b))
    throw ContextError(std::string(where) + ": modules differ (" + a->name() +
                       " vs " + b->name() + ")");
}

// ===== ModuleMap ============================================================

CheckReport check_module_map(const ModulePtr& source, const ModulePtr& target,
                             const std::vector<ModuleElement>& images) {
  if (!source || !target)
    throw ContextError("check_module_map: null module");
  if (!source->is_direct())
    throw ContextError(
        "check_module_map: source must be a direct presentation");
  require_same_algebra(source->algebra(), target->algebra(),
                       "check_module_map");
  if (images.size() != source->rank())
    throw ArityError("check_module_map: expected " +
                     std::to_string(source->rank()) + " images, got " +
                     std::to_string(images.size()));
  for (const auto& im : images) {
    if (!im.owner())
      throw ContextError("check_module_map: default-constructed image");
    require_same_module(im.owner(), target, "check_module_map images");
  }

  CheckReport report;
  report.axiom = "module-map";
  const AlgebraPtr& a = source->algebra();
  for (const auto& row : source->user_rows()) {
    ++report.samples;
    ModuleElement image = target->zero_element();
    for (std::size_t i = 0; i < row.size(); ++i)
      image = image + action(a->nu(row[i]), images[i]);
    if (!image.is_zero())
      report.failures.push_back(
          {polyvec_to_string(row), image.to_string(), "0"});
  }
  return report;
}

ModuleMap ModuleMap::make(ModulePtr source, ModulePtr target,
                          std::vector<ModuleElement> images) {
  const CheckReport report = check_module_map(source, target, images);
  if (!report.ok())
    throw RelationViolation("images do not define a module map from " +
                                source->name() + " to " + target->name(),
                            report.failures[0].input,
                            report.failures[0].lhs);
  ModuleMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.images_ = std::move(images);
  return m;
}

ModuleMap ModuleMap::identity(const ModulePtr& m) {
  if (!m) throw ContextError("ModuleMap::identity: null module");
  return make(m, m, m->generators());
}

ModuleMap ModuleMap::zero_map(ModulePtr source, ModulePtr target) {
  if (!source || !target)
    throw ContextError("ModuleMap::zero_map: null module");
  std::vector<ModuleElement> images(source->rank(), target->zero_element());
  return make(std::move(source), std::move(target), std::move(images));
}

ModuleElement ModuleMap::apply(const ModuleElement& m) const {
  if (!source_) throw ContextError("apply on a default-constructed map");
  if (!m.owner()) throw ContextError("apply: default-constructed element");
  require_same_module(m.owner(), source_, "ModuleMap::apply");
  const AlgebraPtr& a = source_->algebra();
  ModuleElement out = target_->zero_element();
  for (std::size_t i = 0; i < images_.size(); ++i)
    out = out + action(a->nu(m.rep()[i]), images_[i]);
  return out;
}

bool ModuleMap::operator==(const ModuleMap& o) const {
  if (!source_ || !o.source_) return !source_ && !o.source_;
  return source_->same_as(*o.source_) && target_->same_as(*o.target_) &&
         images_ == o.images_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& h) {
  if (!g.source() || !h.source())
    throw ContextError("compose: default-constructed map");
  require_same_module(g.target(), h.source(), "compose (module maps)");
  std::vector<ModuleElement> images;
  images.reserve(g.images().size());
  for (const auto& im : g.images()) images.push_back(h.apply(im));
  return ModuleMap::make(g.source(), h.target(), std::move(images));
}

// ===== direct sums ==========================================================

DirectSum direct_sum(const ModulePtr& left, const ModulePtr& right,
                     std::string name) {
  if (!left || !right) throw ContextError("direct_sum: null module");
  if (!left->is_direct() || !right->is_direct())
    throw ContextError("direct_sum: both summands must be direct");
  require_same_algebra(left->algebra(), right->algebra(), "direct_sum");
  const AlgebraPtr& a = left->algebra();
  const ContextPtr& ctx = a->context();
  const std::size_t rl = left->rank(), rr = right->rank();

  std::vector<PolyVec> rows;
  for (const auto& row : left->user_rows()) {
    PolyVec r = row;
    for (std::size_t i = 0; i < rr; ++i) r.push_back(Poly::zero(ctx));
    rows.push_back(std::move(r));
  }
  for (const auto& row : right->user_rows()) {
    PolyVec r = polyvec_zero(ctx, rl);
    r.insert(r.end(), row.begin(), row.end());
    rows.push_back(std::move(r));
  }
  if (name.empty()) name = left->name() + "+" + right->name();
  ModulePtr sum =
      ModulePresentation::make(a, rl + rr, std::move(rows), std::move(name));

  std::vector<ModuleElement> inj_l, inj_r, proj_l, proj_r;
  for (std::size_t i = 0; i < rl; ++i) inj_l.push_back(sum->generator(i));
  for (std::size_t i = 0; i < rr; ++i)
    inj_r.push_back(sum->generator(rl + i));
  for (std::size_t i = 0; i < rl + rr; ++i) {
    proj_l.push_back(i < rl ? left->generator(i) : left->zero_element());
    proj_r.push_back(i < rl ? right->zero_element()
                            : right->generator(i - rl));
  }
  DirectSum out;
  out.module = sum;
  out.inject_left = ModuleMap::make(left, sum, std::move(inj_l));
  out.inject_right = ModuleMap::make(right, sum, std::move(inj_r));
  out.project_left = ModuleMap::make(sum, left, std::move(proj_l));
  out.project_right = ModuleMap::make(sum, right, std::move(proj_r));
  return out;
}

}  // namespace kahler
