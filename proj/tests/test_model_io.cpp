#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "sing/dataset.hpp"
#include "sing/error.hpp"
#include "sing/model_io.hpp"

using namespace sing;

namespace {

GroupStore car_store() {
  Schema s = car_schema();
  GroupStore store(s, DeltaVector({0.1, 2.55, 0.1, 0.1 / 3.0, 1e-7, 4.999999}));
  store.add(Group{{1, 1, 2, 2, 1, 1}, 1, GroupOrigin::initial});
  store.add(Group{{4, 3, 5, 5, 3, 3}, 4, GroupOrigin::relearned});
  return store;
}

}  // namespace

TEST_CASE("model dump round-trips exactly") {
  auto store = car_store();
  std::stringstream buf;
  write_model(buf, store);
  auto back = read_model(buf);
  CHECK(back.schema() == store.schema());
  CHECK(back.delta() == store.delta());
  REQUIRE(back.size() == 2);
  CHECK(back.groups()[0] == store.groups()[0]);
  CHECK(back.groups()[1] == store.groups()[1]);

  std::stringstream again;
  write_model(again, back);
  std::stringstream first;
  write_model(first, store);
  CHECK(again.str() == first.str());
}

TEST_CASE("model header layout") {
  GroupStore store(iris_schema(), DeltaVector({0.75, 0.75, 0.75, 0.5}));
  store.add(Group{{5.1, 3.5, 1.4, 0.2}, 2, GroupOrigin::initial});
  std::stringstream buf;
  write_model(buf, store);
  std::string header, delta, row;
  std::getline(buf, header);
  std::getline(buf, delta);
  std::getline(buf, row);
  CHECK(header.rfind("sing-model,1,4,3,", 0) == 0);
  CHECK(delta == "0.75,0.75,0.75,0.5");
  CHECK(row == "2,initial,5.1,3.5,1.4,0.2");
}

TEST_CASE("model reader rejects malformed input") {
  std::stringstream empty;
  CHECK_THROWS_AS(read_model(empty), ParseError);
  std::stringstream magic("not-a-model,1,1,2,x,a,b\n1\n");
  CHECK_THROWS_AS(read_model(magic), ParseError);
  std::stringstream count("sing-model,1,2,2,x,a,b\n1\n");
  CHECK_THROWS_AS(read_model(count), ParseError);
  std::stringstream origin("sing-model,1,1,2,x,a,b\n1\n1,guessed,0.5\n");
  CHECK_THROWS_AS(read_model(origin), ParseError);
  std::stringstream label("sing-model,1,1,2,x,a,b\n1\n3,initial,0.5\n");
  CHECK_THROWS_AS(read_model(label), ConfigError);
  std::stringstream delta("sing-model,1,1,2,x,a,b\n-1\n");
  CHECK_THROWS_AS(read_model(delta), ConfigError);
}

TEST_CASE("save and load through a file") {
  const auto path = std::filesystem::temp_directory_path() / "sing_model_io_test.model";
  auto store = car_store();
  save_model(path, store);
  auto back = load_model(path);
  CHECK(back.groups()[1] == store.groups()[1]);
  std::filesystem::remove(path);
  CHECK_THROWS_WITH_AS(load_model(path), doctest::Contains(path.string().c_str()), ParseError);
}
