#include "katal/kernel.hpp"
#include "katal/objects.hpp"
#include "katal/runtime.hpp"

namespace katal {

void register_builtin_templates(Runtime& rt) {
    rt.register_template("super_object", 1, kernel::super_object::handlers());
    rt.register_template("dock", 1, kernel::dock::handlers());
    rt.register_template("authentication", 1, kernel::auth::handlers());
    rt.register_template("schedule", 1, kernel::schedule::handlers());
    rt.register_template("instantiation", 1, kernel::instantiation::handlers());
    rt.register_template("governance", 1, kernel::governance::handlers());
    rt.register_template("consensus", 1, kernel::consensus::handlers());
    rt.register_template("account", 1, objects::account::handlers());
    rt.register_template("issuance", 1, objects::issuance::handlers());
    rt.register_template("oracle", 1, objects::oracle::handlers());
    rt.register_template("contract", 1, objects::contract::handlers());
}

}  // namespace katal
