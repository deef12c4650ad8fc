from DiophTools.ChosenNum.IO.NumIO import NumIO
