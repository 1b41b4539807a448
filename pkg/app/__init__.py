# treebound: domination-number bounds for the zeroth-order general Randić index of trees
