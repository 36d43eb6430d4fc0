#pragma once

namespace klab {

class GroebnerBasis;
struct SyzygyMatrix;
struct LengthCertificate;

namespace audit {

/// Receives every Gröbner basis, syzygy matrix and length certificate the
/// library produces on the current thread while a Scope is active.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual void basis(const GroebnerBasis&) {}
  virtual void syzygies(const GroebnerBasis&, const SyzygyMatrix&) {}
  virtual void certificate(const LengthCertificate&) {}
};

/// The innermost active observer, or null.
Observer* current() noexcept;

class Scope {
 public:
  explicit Scope(Observer& observer) noexcept;
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  Observer* previous_;
};

}  // namespace audit
}  // namespace klab
