#include "affscat/instance.hpp"

#include "affscat/error.hpp"

namespace affscat {

Instance Instance::from_exchange(const Mat& b) {
  Instance inst;
  inst.b = b;
  inst.cm = exchange_to_cartan(b);
  inst.cls = classify(inst.cm);
  if (inst.cls.kind != Finiteness::Affine) throw Error(ErrorCode::NotAffine, "exchange matrix is not of affine type");
  inst.c = coxeter_from_exchange(b);
  inst.av = affine_vectors(inst.cm, inst.cls, inst.c);
  return inst;
}

Instance Instance::inverse() const { return from_exchange(Mat(-b)); }

}  // namespace affscat
