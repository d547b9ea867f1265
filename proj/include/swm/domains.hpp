#pragma once

#include <stdexcept>

#include "swm/env.hpp"

namespace swm {

// The four planning domains. Preconditions and effects follow the standard
// STRIPS formulations; negated state ("not on the ground", "not inflated",
// "unfastened", "unshaked") is modelled with explicit complementary
// predicates so preconditions stay positive.

namespace detail {

inline Literal lit(std::string pred, std::vector<std::string> terms = {}) {
  return Literal{std::move(pred), std::move(terms)};
}

inline Domain make_blocksworld() {
  Domain d;
  d.name = "blocksworld";
  d.capitalize_sentences = false;
  d.predicates = {
      {"on-table", {1, "{0} is on the table.", ""}},
      {"on", {2, "{0} is on {1}.", ""}},
      {"clear", {1, "The {0} is clear.", ""}},
      {"arm-empty", {0, "Robot arm is empty.", ""}},
      {"holding", {1, "You have {0}.", ""}},
  };

  ActionSchema pickup;
  pickup.name = "pickup";
  pickup.param_types = {"block"};
  pickup.pre = {lit("clear", {"?0"}), lit("on-table", {"?0"}), lit("arm-empty")};
  pickup.add = {lit("holding", {"?0"})};
  pickup.del = {lit("on-table", {"?0"}), lit("clear", {"?0"}), lit("arm-empty")};
  pickup.surface_tpl = "Pickup {0}.";
  pickup.patterns = {"pickup ?0", "pick up ?0"};

  ActionSchema putdown;
  putdown.name = "putdown";
  putdown.param_types = {"block"};
  putdown.pre = {lit("holding", {"?0"})};
  putdown.add = {lit("on-table", {"?0"}), lit("clear", {"?0"}), lit("arm-empty")};
  putdown.del = {lit("holding", {"?0"})};
  putdown.surface_tpl = "Putdown {0}.";
  putdown.patterns = {"putdown ?0", "put down ?0"};

  ActionSchema stack;
  stack.name = "stack";
  stack.param_types = {"block", "block"};
  stack.pre = {lit("holding", {"?0"}), lit("clear", {"?1"})};
  stack.add = {lit("on", {"?0", "?1"}), lit("clear", {"?0"}), lit("arm-empty")};
  stack.del = {lit("holding", {"?0"}), lit("clear", {"?1"})};
  stack.surface_tpl = "Stack {0} on {1}.";
  stack.patterns = {"stack ?0 [on] [top] [of] ?1"};
  stack.distinct_params = true;

  ActionSchema unstack;
  unstack.name = "unstack";
  unstack.param_types = {"block", "block"};
  unstack.pre = {lit("arm-empty"), lit("clear", {"?0"}), lit("on", {"?0", "?1"})};
  unstack.add = {lit("holding", {"?0"}), lit("clear", {"?1"})};
  unstack.del = {lit("on", {"?0", "?1"}), lit("clear", {"?0"}), lit("arm-empty")};
  unstack.surface_tpl = "Unstack {0} from {1}.";
  unstack.patterns = {"unstack ?0 [from] ?1"};
  unstack.distinct_params = true;

  d.schemas = {pickup, putdown, stack, unstack};
  return d;
}

inline Domain make_gripper() {
  Domain d;
  d.name = "gripper";
  d.type_sentences = true;
  d.predicates = {
      {"at-robby", {1, "Robby is at {0}.", ""}},
      {"at", {2, "{0} is at {1}.", ""}},
      {"free", {1, "{0} is free.", ""}},
      {"carry", {2, "{0} is carrying {1}.", ""}},
  };

  ActionSchema move;
  move.name = "move";
  move.param_types = {"room", "room"};
  move.pre = {lit("at-robby", {"?0"})};
  move.add = {lit("at-robby", {"?1"})};
  move.del = {lit("at-robby", {"?0"})};
  move.surface_tpl = "Move from {0} to {1}.";
  move.patterns = {"move [from] ?0 [to] ?1", "go [from] ?0 [to] ?1"};
  move.distinct_params = true;

  ActionSchema pick;
  pick.name = "pick";
  pick.param_types = {"ball", "room", "gripper"};
  pick.pre = {lit("at", {"?0", "?1"}), lit("at-robby", {"?1"}), lit("free", {"?2"})};
  pick.add = {lit("carry", {"?0", "?2"})};
  pick.del = {lit("at", {"?0", "?1"}), lit("free", {"?2"})};
  pick.surface_tpl = "Pick up {0} at {1} with arm {2}.";
  pick.patterns = {"pick [up] ?0 [at|in] ?1 [with] [arm|gripper] ?2"};

  ActionSchema drop;
  drop.name = "drop";
  drop.param_types = {"ball", "room", "gripper"};
  drop.pre = {lit("carry", {"?0", "?2"}), lit("at-robby", {"?1"})};
  drop.add = {lit("at", {"?0", "?1"}), lit("free", {"?2"})};
  drop.del = {lit("carry", {"?0", "?2"})};
  drop.surface_tpl = "Drop {0} at {1} with arm {2}.";
  drop.patterns = {"drop ?0 [at|in] ?1 [with] [arm|gripper] ?2",
                   "put down ?0 [at|in] ?1 [with] [arm|gripper] ?2"};

  d.schemas = {move, pick, drop};
  return d;
}

inline Domain make_tyreworld() {
  Domain d;
  d.name = "tyreworld";
  d.predicates = {
      {"open", {1, "{0} is open.", ""}},
      {"closed", {1, "{0} is closed.", ""}},
      {"unlocked", {1, "{0} is unlocked.", ""}},
      {"in", {2, "{0} is in {1}.", ""}},
      {"have", {1, "You have {0}.", ""}},
      {"fastened", {1, "Hub {0} is fastened.", ""}},
      {"unfastened", {1, "Hub {0} is unfastened.", ""}},
      {"on-ground", {1, "Hub {0} is on the ground.", ""}},
      {"jacked-up", {1, "Hub {0} is not on the ground.", ""}},
      {"tight", {2, "The nut {0} on the hub {1} is tight.", ""}},
      {"loose", {2, "The nut {0} on the hub {1} is loose.", ""}},
      {"intact", {1, "Wheel {0} is intact.", ""}},
      {"inflated", {1, "Wheel {0} is inflated.", ""}},
      {"not-inflated", {1, "Wheel {0} is not inflated.", ""}},
      {"on-hub", {2, "Wheel {0} is on hub {1}.", "{0} is on {1}."}},
      {"free", {1, "{0} is free.", ""}},
  };
  d.type_groups = {{"fetchable", {"wheel", "tool", "nut"}}};

  ActionSchema open;
  open.name = "open";
  open.param_types = {"container"};
  open.pre = {lit("unlocked", {"?0"}), lit("closed", {"?0"})};
  open.add = {lit("open", {"?0"})};
  open.del = {lit("closed", {"?0"})};
  open.surface_tpl = "Open {0}.";
  open.patterns = {"open [the] ?0"};

  ActionSchema close;
  close.name = "close";
  close.param_types = {"container"};
  close.pre = {lit("open", {"?0"})};
  close.add = {lit("closed", {"?0"})};
  close.del = {lit("open", {"?0"})};
  close.surface_tpl = "Close {0}.";
  close.patterns = {"close [the] ?0"};

  ActionSchema fetch;
  fetch.name = "fetch";
  fetch.param_types = {"fetchable", "container"};
  fetch.pre = {lit("in", {"?0", "?1"}), lit("open", {"?1"})};
  fetch.add = {lit("have", {"?0"})};
  fetch.del = {lit("in", {"?0", "?1"})};
  fetch.surface_tpl = "Fetch {0} from {1}.";
  fetch.patterns = {"fetch [the] ?0 [from] [the] ?1"};

  ActionSchema put_away;
  put_away.name = "put-away";
  put_away.param_types = {"fetchable", "container"};
  put_away.pre = {lit("have", {"?0"}), lit("open", {"?1"})};
  put_away.add = {lit("in", {"?0", "?1"})};
  put_away.del = {lit("have", {"?0"})};
  put_away.surface_tpl = "Put-away {0} in {1}.";
  put_away.patterns = {"put-away [the] ?0 [in] [the] ?1", "put away [the] ?0 [in] [the] ?1"};

  ActionSchema loosen;
  loosen.name = "loosen";
  loosen.param_types = {"nut", "hub"};
  loosen.pre = {lit("have", {"wrench"}), lit("tight", {"?0", "?1"}), lit("on-ground", {"?1"})};
  loosen.add = {lit("loose", {"?0", "?1"})};
  loosen.del = {lit("tight", {"?0", "?1"})};
  loosen.surface_tpl = "Loosen the nut {0} on the hub {1}.";
  loosen.patterns = {"loosen [the] [nut] ?0 [on] [the] [hub] ?1"};

  ActionSchema tighten;
  tighten.name = "tighten";
  tighten.param_types = {"nut", "hub"};
  tighten.pre = {lit("have", {"wrench"}), lit("loose", {"?0", "?1"}), lit("on-ground", {"?1"})};
  tighten.add = {lit("tight", {"?0", "?1"})};
  tighten.del = {lit("loose", {"?0", "?1"})};
  tighten.surface_tpl = "Tighten the nut {0} on the hub {1}.";
  tighten.patterns = {"tighten [the] [nut] ?0 [on] [the] [hub] ?1"};

  ActionSchema jack_up;
  jack_up.name = "jack-up";
  jack_up.param_types = {"hub"};
  jack_up.pre = {lit("have", {"jack"}), lit("on-ground", {"?0"})};
  jack_up.add = {lit("jacked-up", {"?0"})};
  jack_up.del = {lit("on-ground", {"?0"}), lit("have", {"jack"})};
  jack_up.surface_tpl = "Jack-up the hub {0}.";
  jack_up.patterns = {"jack-up [the] [hub] ?0", "jack up [the] [hub] ?0"};

  ActionSchema jack_down;
  jack_down.name = "jack-down";
  jack_down.param_types = {"hub"};
  jack_down.pre = {lit("jacked-up", {"?0"})};
  jack_down.add = {lit("on-ground", {"?0"}), lit("have", {"jack"})};
  jack_down.del = {lit("jacked-up", {"?0"})};
  jack_down.surface_tpl = "Jack-down the hub {0}.";
  jack_down.patterns = {"jack-down [the] [hub] ?0", "jack down [the] [hub] ?0"};

  ActionSchema undo;
  undo.name = "undo";
  undo.param_types = {"nut", "hub"};
  undo.pre = {lit("jacked-up", {"?1"}), lit("fastened", {"?1"}), lit("have", {"wrench"}),
              lit("loose", {"?0", "?1"})};
  undo.add = {lit("have", {"?0"}), lit("unfastened", {"?1"})};
  undo.del = {lit("fastened", {"?1"}), lit("loose", {"?0", "?1"})};
  undo.surface_tpl = "Undo the fastening of the nut {0} on the hub {1}.";
  undo.patterns = {"undo [the] [fastening] [of] [the] [nut] ?0 [on] [the] [hub] ?1"};
  undo.obs_tpl = "Hub {1} is unfastened.";

  ActionSchema do_up;
  do_up.name = "do-up";
  do_up.param_types = {"nut", "hub"};
  do_up.pre = {lit("have", {"wrench"}), lit("unfastened", {"?1"}), lit("jacked-up", {"?1"}),
               lit("have", {"?0"})};
  do_up.add = {lit("loose", {"?0", "?1"}), lit("fastened", {"?1"})};
  do_up.del = {lit("unfastened", {"?1"}), lit("have", {"?0"})};
  do_up.surface_tpl = "Do-up the nut {0} on the hub {1}.";
  do_up.patterns = {"do-up [the] [nut] ?0 [on] [the] [hub] ?1",
                    "do up [the] [nut] ?0 [on] [the] [hub] ?1"};

  ActionSchema remove_wheel;
  remove_wheel.name = "remove-wheel";
  remove_wheel.param_types = {"wheel", "hub"};
  remove_wheel.pre = {lit("jacked-up", {"?1"}), lit("on-hub", {"?0", "?1"}), lit("unfastened", {"?1"})};
  remove_wheel.add = {lit("have", {"?0"}), lit("free", {"?1"})};
  remove_wheel.del = {lit("on-hub", {"?0", "?1"})};
  remove_wheel.surface_tpl = "Remove-wheel {0} from the hub {1}.";
  remove_wheel.patterns = {"remove-wheel ?0 [from] [the] [hub] ?1",
                           "remove wheel ?0 [from] [the] [hub] ?1"};
  remove_wheel.obs_tpl = "You have {0}.";

  ActionSchema put_on_wheel;
  put_on_wheel.name = "put-on-wheel";
  put_on_wheel.param_types = {"wheel", "hub"};
  put_on_wheel.pre = {lit("have", {"?0"}), lit("free", {"?1"}), lit("unfastened", {"?1"}),
                      lit("jacked-up", {"?1"})};
  put_on_wheel.add = {lit("on-hub", {"?0", "?1"})};
  put_on_wheel.del = {lit("have", {"?0"}), lit("free", {"?1"})};
  put_on_wheel.surface_tpl = "Put-on-wheel {0} on the hub {1}.";
  put_on_wheel.patterns = {"put-on-wheel ?0 [on] [the] [hub] ?1",
                           "put on wheel ?0 [on] [the] [hub] ?1"};

  ActionSchema inflate;
  inflate.name = "inflate";
  inflate.param_types = {"wheel"};
  inflate.pre = {lit("have", {"pump"}), lit("not-inflated", {"?0"}), lit("intact", {"?0"})};
  inflate.add = {lit("inflated", {"?0"})};
  inflate.del = {lit("not-inflated", {"?0"})};
  inflate.surface_tpl = "Inflate wheel {0}.";
  inflate.patterns = {"inflate [the] [wheel] ?0"};

  d.schemas = {open, close, fetch, put_away, loosen, tighten, jack_up,
               jack_down, undo, do_up, remove_wheel, put_on_wheel, inflate};
  return d;
}

inline Domain make_barman() {
  Domain d;
  d.name = "barman";
  d.predicates = {
      {"ontable", {1, "{0} is on the table.", ""}},
      {"holding", {2, "{0} hand is holding {1}.", ""}},
      {"handempty", {1, "{0} hand is empty.", ""}},
      {"empty", {1, "{0} is empty.", ""}},
      {"clean", {1, "{0} is clean.", ""}},
      {"used", {2, "{0} is used with {1}.", ""}},
      {"contains", {2, "{0} contains {1}.", ""}},
      {"dispenses", {2, "{0} dispenses {1}.", ""}},
      {"shaker-level", {2, "{0} is at level {1}.", ""}},
      {"shaker-empty-level", {2, "{0} is at empty level {1}.", ""}},
      {"next", {2, "Level {0} is next to level {1}.", ""}},
      {"unshaked", {1, "{0} is unshaked.", ""}},
      {"shaked", {1, "{0} is shaked.", ""}},
      {"cocktail-part1", {2, "{0} part1 ingredient is {1}.", ""}},
      {"cocktail-part2", {2, "{0} part2 ingredient is {1}.", ""}},
  };
  d.type_groups = {{"container", {"shot", "shaker"}},
                   {"beverage", {"ingredient", "cocktail"}}};

  ActionSchema grasp;
  grasp.name = "grasp";
  grasp.param_types = {"hand", "container"};
  grasp.pre = {lit("ontable", {"?1"}), lit("handempty", {"?0"})};
  grasp.add = {lit("holding", {"?0", "?1"})};
  grasp.del = {lit("ontable", {"?1"}), lit("handempty", {"?0"})};
  grasp.surface_tpl = "{0} grasp {1}.";
  grasp.patterns = {"?0 grasp ?1", "grasp ?1 [with] ?0"};

  ActionSchema leave;
  leave.name = "leave";
  leave.param_types = {"hand", "container"};
  leave.pre = {lit("holding", {"?0", "?1"})};
  leave.add = {lit("handempty", {"?0"}), lit("ontable", {"?1"})};
  leave.del = {lit("holding", {"?0", "?1"})};
  leave.surface_tpl = "{0} leave {1}.";
  leave.patterns = {"?0 leave ?1", "leave ?1 [with] ?0"};

  ActionSchema fill_shot;
  fill_shot.name = "fill-shot";
  fill_shot.param_types = {"shot", "ingredient", "hand", "hand", "dispenser"};
  fill_shot.pre = {lit("holding", {"?2", "?0"}), lit("handempty", {"?3"}),
                   lit("dispenses", {"?4", "?1"}), lit("empty", {"?0"}), lit("clean", {"?0"})};
  fill_shot.add = {lit("contains", {"?0", "?1"}), lit("used", {"?0", "?1"})};
  fill_shot.del = {lit("empty", {"?0"}), lit("clean", {"?0"})};
  fill_shot.surface_tpl = "Fill-shot {0} {1} {2} {3} {4}.";
  fill_shot.patterns = {"fill-shot ?0 [with] ?1 ?2 ?3 [from] ?4"};

  ActionSchema refill_shot;
  refill_shot.name = "refill-shot";
  refill_shot.param_types = {"shot", "ingredient", "hand", "hand", "dispenser"};
  refill_shot.pre = {lit("holding", {"?2", "?0"}), lit("handempty", {"?3"}),
                     lit("dispenses", {"?4", "?1"}), lit("empty", {"?0"}), lit("used", {"?0", "?1"})};
  refill_shot.add = {lit("contains", {"?0", "?1"})};
  refill_shot.del = {lit("empty", {"?0"})};
  refill_shot.surface_tpl = "Refill-shot {0} {1} {2} {3} {4}.";
  refill_shot.patterns = {"refill-shot ?0 [with] ?1 ?2 ?3 [from] ?4"};

  ActionSchema empty_shot;
  empty_shot.name = "empty-shot";
  empty_shot.param_types = {"hand", "shot", "beverage"};
  empty_shot.pre = {lit("holding", {"?0", "?1"}), lit("contains", {"?1", "?2"})};
  empty_shot.add = {lit("empty", {"?1"})};
  empty_shot.del = {lit("contains", {"?1", "?2"})};
  empty_shot.surface_tpl = "Empty-shot {0} {1} {2}.";
  empty_shot.patterns = {"empty-shot ?0 ?1 ?2", "empty shot ?1 [of] ?2 [with] ?0"};

  ActionSchema clean_shot;
  clean_shot.name = "clean-shot";
  clean_shot.param_types = {"shot", "beverage", "hand", "hand"};
  clean_shot.pre = {lit("holding", {"?2", "?0"}), lit("handempty", {"?3"}), lit("empty", {"?0"}),
                    lit("used", {"?0", "?1"})};
  clean_shot.add = {lit("clean", {"?0"})};
  clean_shot.del = {lit("used", {"?0", "?1"})};
  clean_shot.surface_tpl = "Clean-shot {0} {1} {2} {3}.";
  clean_shot.patterns = {"clean-shot ?0 ?1 ?2 ?3", "clean shot ?0 [of] ?1 ?2 ?3"};

  ActionSchema pour_clean;
  pour_clean.name = "pour-shot-to-clean-shaker";
  pour_clean.param_types = {"shot", "ingredient", "shaker", "hand", "level", "level"};
  pour_clean.pre = {lit("holding", {"?3", "?0"}), lit("contains", {"?0", "?1"}), lit("empty", {"?2"}),
                    lit("clean", {"?2"}), lit("shaker-level", {"?2", "?4"}), lit("next", {"?4", "?5"})};
  pour_clean.add = {lit("contains", {"?2", "?1"}), lit("unshaked", {"?2"}),
                    lit("shaker-level", {"?2", "?5"}), lit("empty", {"?0"})};
  pour_clean.del = {lit("contains", {"?0", "?1"}), lit("empty", {"?2"}), lit("clean", {"?2"}),
                    lit("shaker-level", {"?2", "?4"})};
  pour_clean.surface_tpl = "Pour-shot-to-clean-shaker {0} {1} {2} {3} {4} {5}.";
  pour_clean.patterns = {"pour-shot-to-clean-shaker ?0 ?1 ?2 ?3 ?4 ?5"};

  ActionSchema pour_used;
  pour_used.name = "pour-shot-to-used-shaker";
  pour_used.param_types = {"shot", "ingredient", "shaker", "hand", "level", "level"};
  pour_used.pre = {lit("holding", {"?3", "?0"}), lit("contains", {"?0", "?1"}), lit("unshaked", {"?2"}),
                   lit("shaker-level", {"?2", "?4"}), lit("next", {"?4", "?5"})};
  pour_used.add = {lit("contains", {"?2", "?1"}), lit("shaker-level", {"?2", "?5"}), lit("empty", {"?0"})};
  pour_used.del = {lit("contains", {"?0", "?1"}), lit("shaker-level", {"?2", "?4"})};
  pour_used.surface_tpl = "Pour-shot-to-used-shaker {0} {1} {2} {3} {4} {5}.";
  pour_used.patterns = {"pour-shot-to-used-shaker ?0 ?1 ?2 ?3 ?4 ?5"};

  ActionSchema empty_shaker;
  empty_shaker.name = "empty-shaker";
  empty_shaker.param_types = {"hand", "shaker", "cocktail", "level", "level"};
  empty_shaker.pre = {lit("holding", {"?0", "?1"}), lit("contains", {"?1", "?2"}), lit("shaked", {"?1"}),
                      lit("shaker-level", {"?1", "?3"}), lit("shaker-empty-level", {"?1", "?4"})};
  empty_shaker.add = {lit("shaker-level", {"?1", "?4"}), lit("empty", {"?1"})};
  empty_shaker.del = {lit("shaked", {"?1"}), lit("shaker-level", {"?1", "?3"}),
                      lit("contains", {"?1", "?2"})};
  empty_shaker.surface_tpl = "Empty-shaker {0} {1} {2} {3} {4}.";
  empty_shaker.patterns = {"empty-shaker ?0 ?1 ?2 ?3 ?4"};

  ActionSchema clean_shaker;
  clean_shaker.name = "clean-shaker";
  clean_shaker.param_types = {"hand", "hand", "shaker"};
  clean_shaker.pre = {lit("holding", {"?0", "?2"}), lit("handempty", {"?1"}), lit("empty", {"?2"})};
  clean_shaker.add = {lit("clean", {"?2"})};
  clean_shaker.del = {};
  clean_shaker.surface_tpl = "Clean-shaker {0} {1} {2}.";
  clean_shaker.patterns = {"clean-shaker ?0 ?1 ?2", "clean shaker ?2 ?0 ?1"};

  ActionSchema shake;
  shake.name = "shake";
  shake.param_types = {"cocktail", "ingredient", "ingredient", "shaker", "hand", "hand"};
  shake.pre = {lit("holding", {"?4", "?3"}), lit("handempty", {"?5"}), lit("contains", {"?3", "?1"}),
               lit("contains", {"?3", "?2"}), lit("cocktail-part1", {"?0", "?1"}),
               lit("cocktail-part2", {"?0", "?2"}), lit("unshaked", {"?3"})};
  shake.add = {lit("shaked", {"?3"}), lit("contains", {"?3", "?0"})};
  shake.del = {lit("unshaked", {"?3"}), lit("contains", {"?3", "?1"}), lit("contains", {"?3", "?2"})};
  shake.surface_tpl = "Shake {0} {1} {2} {3} {4} {5}.";
  shake.patterns = {"shake ?0 ?1 ?2 ?3 ?4 ?5"};

  ActionSchema pour_to_shot;
  pour_to_shot.name = "pour-shaker-to-shot";
  pour_to_shot.param_types = {"beverage", "shot", "hand", "shaker", "level", "level"};
  pour_to_shot.pre = {lit("holding", {"?2", "?3"}), lit("shaked", {"?3"}), lit("empty", {"?1"}),
                      lit("clean", {"?1"}), lit("contains", {"?3", "?0"}),
                      lit("shaker-level", {"?3", "?4"}), lit("next", {"?5", "?4"})};
  pour_to_shot.add = {lit("contains", {"?1", "?0"}), lit("shaker-level", {"?3", "?5"})};
  pour_to_shot.del = {lit("clean", {"?1"}), lit("empty", {"?1"}), lit("shaker-level", {"?3", "?4"})};
  pour_to_shot.surface_tpl = "Pour-shaker-to-shot {0} {1} {2} {3} {4} {5}.";
  pour_to_shot.patterns = {"pour-shaker-to-shot ?0 ?1 ?2 ?3 ?4 ?5"};

  d.schemas = {grasp, leave, fill_shot, refill_shot, empty_shot, clean_shot, pour_clean,
               pour_used, empty_shaker, clean_shaker, shake, pour_to_shot};
  return d;
}

}  // namespace detail

inline const std::vector<std::string>& domain_names() {
  static const std::vector<std::string> names = {"blocksworld", "gripper", "tyreworld", "barman"};
  return names;
}

inline const Domain& domain_by_name(const std::string& name) {
  static const Domain blocksworld = detail::make_blocksworld();
  static const Domain gripper = detail::make_gripper();
  static const Domain tyreworld = detail::make_tyreworld();
  static const Domain barman = detail::make_barman();
  if (name == "blocksworld") return blocksworld;
  if (name == "gripper") return gripper;
  if (name == "tyreworld") return tyreworld;
  if (name == "barman") return barman;
  throw std::runtime_error("unknown domain: " + name);
}

}  // namespace swm
